//! DIMACS CNF export of the good-coloring problem.
//!
//! Variable `i + 1` is host edge `i` in canonical order, true meaning red.
//! Every host `C_L` gets a clause asking for one of its edges to be red;
//! every set of `n` pairwise disjoint host edges gets a clause asking for
//! one of them to be blue. Models are exactly the good colorings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bits::Graph64;
use crate::host::{host_edges, Coloring, EdgeSet, PartiteShape};
use crate::{Error, Result};

pub const DEFAULT_CLAUSE_CAP: usize = 5_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariableMap {
    pub shape: PartiteShape,
    pub n: usize,
    pub cycle_length: usize,
    /// `variables[i]` is the host edge behind DIMACS variable `i + 1`.
    pub variables: Vec<[usize; 2]>,
    pub true_means: String,
}

#[derive(Clone, Debug)]
pub struct CnfExport {
    pub dimacs: String,
    pub var_map: VariableMap,
    pub num_vars: usize,
    pub num_clauses: usize,
}

/// Calls `f` once per `length`-cycle of `g`, as a vertex sequence starting
/// at its least vertex with second vertex below the last.
fn for_each_cycle(g: &Graph64, length: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn extend(
        g: &Graph64,
        length: usize,
        allowed: u64,
        path: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let last = *path.last().expect("nonempty");
        if path.len() == length {
            if g.has_edge(last, path[0]) && path[1] < last {
                return f(path);
            }
            return true;
        }
        let used: u64 = path.iter().fold(0, |m, &v| m | 1 << v);
        let mut next = g.adj[last] & allowed & !used;
        while next != 0 {
            let v = next.trailing_zeros() as usize;
            next &= next - 1;
            path.push(v);
            let keep_going = extend(g, length, allowed, path, f);
            path.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }
    for s in 0..g.n {
        let allowed = !0u64 << s;
        let mut path = vec![s];
        if !extend(g, length, allowed, &mut path, f) {
            return false;
        }
    }
    true
}

/// Calls `f` once per set of `n` pairwise disjoint host edges, given as
/// ascending edge indices.
fn for_each_matching(
    edges: &[(usize, usize)],
    n: usize,
    f: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    fn extend(
        edges: &[(usize, usize)],
        n: usize,
        from: usize,
        used: u64,
        chosen: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if chosen.len() == n {
            return f(chosen);
        }
        for i in from..edges.len() {
            if edges.len() - i < n - chosen.len() {
                break;
            }
            let (u, v) = edges[i];
            let m = 1u64 << u | 1u64 << v;
            if used & m != 0 {
                continue;
            }
            chosen.push(i);
            let keep_going = extend(edges, n, i + 1, used | m, chosen, f);
            chosen.pop();
            if !keep_going {
                return false;
            }
        }
        true
    }
    extend(edges, n, 0, 0, &mut Vec::with_capacity(n), f)
}

pub fn export_cnf(
    shape: &PartiteShape,
    n: usize,
    cycle_length: usize,
    clause_cap: usize,
) -> Result<CnfExport> {
    if n == 0 || cycle_length < 3 {
        return Err(Error::InvalidOptions("need n >= 1 and cycle length >= 3".into()));
    }
    let edges = host_edges(shape);
    let host = shape.host_graph();
    let mut body = String::new();
    let mut clauses = 0usize;

    let complete = for_each_cycle(&host, cycle_length, &mut |cycle| {
        clauses += 1;
        if clauses > clause_cap {
            return false;
        }
        for k in 0..cycle.len() {
            let (a, b) = (cycle[k], cycle[(k + 1) % cycle.len()]);
            let idx = shape.edge_index(a, b).expect("cycle edges are host edges");
            write!(body, "{} ", idx + 1).expect("string write");
        }
        body.push_str("0\n");
        true
    });
    if !complete {
        return Err(Error::ClauseCap { cap: clause_cap });
    }

    let complete = for_each_matching(&edges, n, &mut |set| {
        clauses += 1;
        if clauses > clause_cap {
            return false;
        }
        for &idx in set {
            write!(body, "-{} ", idx + 1).expect("string write");
        }
        body.push_str("0\n");
        true
    });
    if !complete {
        return Err(Error::ClauseCap { cap: clause_cap });
    }

    let num_vars = edges.len();
    let mut dimacs = String::with_capacity(body.len() + 128);
    writeln!(dimacs, "c good colorings of {shape}: no red {n}K_2, no blue C_{cycle_length}")
        .expect("string write");
    writeln!(dimacs, "c variable i is host edge i-1 in canonical order, true = red")
        .expect("string write");
    writeln!(dimacs, "p cnf {num_vars} {clauses}").expect("string write");
    dimacs.push_str(&body);

    Ok(CnfExport {
        dimacs,
        var_map: VariableMap {
            shape: shape.clone(),
            n,
            cycle_length,
            variables: edges.iter().map(|&(u, v)| [u, v]).collect(),
            true_means: "red".into(),
        },
        num_vars,
        num_clauses: clauses,
    })
}

/// Reads a solver model (`v` lines of a competition-format answer, or bare
/// literals) back into a coloring.
pub fn decode_model(text: &str, map: &VariableMap) -> Result<Coloring> {
    let mut red = EdgeSet::empty(&map.shape);
    let mut seen = vec![false; map.variables.len()];
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if let Some(status) = line.strip_prefix('s') {
            if status.trim() != "SATISFIABLE" {
                return Err(Error::Parse(format!("solver status: {}", status.trim())));
            }
            continue;
        }
        let literals = line.strip_prefix('v').unwrap_or(line);
        for token in literals.split_whitespace() {
            let lit: i64 = token
                .parse()
                .map_err(|_| Error::Parse(format!("bad literal {token:?}")))?;
            if lit == 0 {
                continue;
            }
            let var = lit.unsigned_abs() as usize;
            if var > map.variables.len() {
                return Err(Error::Parse(format!("variable {var} out of range")));
            }
            seen[var - 1] = true;
            if lit > 0 {
                let [u, v] = map.variables[var - 1];
                red.insert(u, v)?;
            }
        }
    }
    if let Some(missing) = seen.iter().position(|&s| !s) {
        return Err(Error::Parse(format!("model does not assign variable {}", missing + 1)));
    }
    Ok(Coloring::new(red))
}
