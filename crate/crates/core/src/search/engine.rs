//! Depth-first search over red/blue assignments of host edges.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use crate::bits::Graph64;
use crate::detect::{path_exists, Matching};
use crate::host::{Coloring, EdgeSet, PartiteShape};

use super::symmetry::LexLeader;
use super::PruneCounts;

pub(crate) const RED: u8 = 0;
pub(crate) const BLUE: u8 = 1;

/// Everything fixed for one search run.
pub(crate) struct Problem {
    pub shape: PartiteShape,
    pub n: usize,
    pub cycle_length: usize,
    pub order: Vec<(usize, usize)>,
    /// Per depth: try red before blue?
    pub red_first: Vec<bool>,
    pub lex: Option<LexLeader>,
    pub dominance: bool,
}

/// Shared across workers: budgets, stop flag, result slot.
pub(crate) struct Shared {
    pub node_budget: u64,
    pub deadline: Option<Instant>,
    pub nodes: AtomicU64,
    pub stop: AtomicBool,
    pub budget_hit: AtomicBool,
    pub found: Mutex<Option<Coloring>>,
    pub prunes: Mutex<PruneCounts>,
}

impl Shared {
    pub fn new(node_budget: u64, deadline: Option<Instant>) -> Self {
        Shared {
            node_budget,
            deadline,
            nodes: AtomicU64::new(0),
            stop: AtomicBool::new(false),
            budget_hit: AtomicBool::new(false),
            found: Mutex::new(None),
            prunes: Mutex::new(PruneCounts::default()),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) enum Flow {
    Continue,
    Stop,
}

const FLUSH_EVERY: u64 = 1024;

pub(crate) struct Engine<'a> {
    p: &'a Problem,
    shared: &'a Shared,
    red: Graph64,
    blue: Graph64,
    matching: Matching,
    // matching before each red edge, innermost last
    saved: Vec<Matching>,
    assign: Vec<u8>,
    local_nodes: u64,
    prunes: PruneCounts,
}

impl<'a> Engine<'a> {
    pub fn new(p: &'a Problem, shared: &'a Shared) -> Self {
        let n = p.shape.total_vertices();
        Engine {
            p,
            shared,
            red: Graph64::empty(n),
            blue: Graph64::empty(n),
            matching: Matching::default(),
            saved: Vec::new(),
            assign: Vec::with_capacity(p.order.len()),
            local_nodes: 0,
            prunes: PruneCounts::default(),
        }
    }

    pub fn depth(&self) -> usize {
        self.assign.len()
    }

    pub fn assignment(&self) -> &[u8] {
        &self.assign
    }

    /// Counts a node; returns false once a budget is exhausted or another
    /// worker asked everyone to stop.
    fn tick(&mut self) -> bool {
        self.local_nodes += 1;
        if self.local_nodes.is_multiple_of(FLUSH_EVERY) {
            let total = self.shared.nodes.fetch_add(FLUSH_EVERY, Ordering::Relaxed) + FLUSH_EVERY;
            let over_time = self.shared.deadline.is_some_and(|d| Instant::now() >= d);
            if total >= self.shared.node_budget || over_time {
                self.shared.budget_hit.store(true, Ordering::Relaxed);
                self.shared.stop.store(true, Ordering::Relaxed);
            }
        }
        !self.shared.stop.load(Ordering::Relaxed)
    }

    /// Tries to fix the next edge to `color`. On success the assignment is
    /// pushed; on a prune nothing changes.
    pub fn push(&mut self, color: u8) -> Result<(), Prune> {
        let (u, v) = self.p.order[self.assign.len()];
        if color == RED {
            let saved = self.matching;
            self.red.add_edge(u, v);
            self.matching.after_edge_added(&self.red, u, v);
            if self.matching.size >= self.p.n {
                self.red.remove_edge(u, v);
                self.matching = saved;
                return Err(Prune::Stripe);
            }
            self.assign.push(RED);
            if self.symmetry_prunes() {
                self.assign.pop();
                self.red.remove_edge(u, v);
                self.matching = saved;
                return Err(Prune::Symmetry);
            }
            self.saved.push(saved);
        } else {
            if path_exists(&self.blue, u, v, self.p.cycle_length - 2) {
                return Err(Prune::Cycle);
            }
            self.blue.add_edge(u, v);
            self.assign.push(BLUE);
            if self.symmetry_prunes() {
                self.assign.pop();
                self.blue.remove_edge(u, v);
                return Err(Prune::Symmetry);
            }
        }
        Ok(())
    }

    pub fn pop(&mut self) {
        let depth = self.assign.len() - 1;
        let (u, v) = self.p.order[depth];
        if self.assign.pop() == Some(RED) {
            self.red.remove_edge(u, v);
            self.matching = self.saved.pop().expect("matching saved for every red edge");
        } else {
            self.blue.remove_edge(u, v);
        }
    }

    fn symmetry_prunes(&self) -> bool {
        self.p.lex.as_ref().is_some_and(|lex| lex.prunes(&self.assign))
    }

    fn record(&mut self, why: Prune) {
        match why {
            Prune::Stripe => self.prunes.stripe += 1,
            Prune::Cycle => self.prunes.cycle += 1,
            Prune::Symmetry => self.prunes.symmetry += 1,
            Prune::Dominance => self.prunes.dominance += 1,
        }
    }

    /// Leaf test under dominance: every blue edge must be blocked, i.e.
    /// turning it red would create a red `nK_2`.
    fn red_is_maximal(&self) -> bool {
        if self.matching.size + 1 < self.p.n {
            return self.assign.iter().all(|&c| c == RED);
        }
        for (depth, &c) in self.assign.iter().enumerate() {
            if c != BLUE {
                continue;
            }
            let (u, v) = self.p.order[depth];
            let mut red = self.red;
            red.add_edge(u, v);
            let mut m = self.matching;
            if !m.after_edge_added(&red, u, v) {
                return false;
            }
        }
        true
    }

    fn coloring(&self) -> Coloring {
        let mut red = EdgeSet::empty(&self.p.shape);
        for (depth, &c) in self.assign.iter().enumerate() {
            if c == RED {
                let (u, v) = self.p.order[depth];
                red.insert(u, v).expect("search edges are host edges");
            }
        }
        Coloring::new(red)
    }

    /// Exhausts the subtree below the current assignment.
    pub fn run(&mut self) -> Flow {
        if self.assign.len() == self.p.order.len() {
            if self.p.dominance && !self.red_is_maximal() {
                self.record(Prune::Dominance);
                return Flow::Continue;
            }
            let mut slot = self.shared.found.lock().expect("poisoned");
            if slot.is_none() {
                *slot = Some(self.coloring());
            }
            self.shared.stop.store(true, Ordering::Relaxed);
            return Flow::Stop;
        }
        let depth = self.assign.len();
        let first = if self.p.red_first[depth] { RED } else { BLUE };
        for color in [first, 1 - first] {
            if !self.tick() {
                return Flow::Stop;
            }
            match self.push(color) {
                Err(why) => self.record(why),
                Ok(()) => {
                    let flow = self.run();
                    self.pop();
                    if flow == Flow::Stop {
                        return Flow::Stop;
                    }
                }
            }
        }
        Flow::Continue
    }

    /// Pushes local counters into the shared totals.
    pub fn flush(&mut self) {
        self.shared
            .nodes
            .fetch_add(self.local_nodes % FLUSH_EVERY, Ordering::Relaxed);
        self.local_nodes -= self.local_nodes % FLUSH_EVERY;
        let mut total = self.shared.prunes.lock().expect("poisoned");
        total.add(&self.prunes);
        self.prunes = PruneCounts::default();
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Prune {
    Stripe,
    Cycle,
    Symmetry,
    Dominance,
}
