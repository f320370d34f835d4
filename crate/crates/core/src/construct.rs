//! Extremal good colorings witnessing lower bounds, one strategy per regime.
//!
//! Each family implements [`Construction`] and is registered by name in a
//! [`ConstructionRegistry`]. [`lower_bound_coloring`] picks the family from
//! the formula's regime, builds on `K_{j×(m-1)}` and refuses to return
//! anything that fails [`verify_good`].

use serde::{Deserialize, Serialize};

use crate::detect::{self, CycleWitness, MatchingWitness};
use crate::formula::{ramsey_value, RamseyValue, Regime};
use crate::host::{Coloring, EdgeSet, PartiteShape};
use crate::{Error, Result};

/// Host size used for the infinite row when the caller does not pick one.
pub const DEFAULT_INFINITE_T: usize = 4;

/// Outcome of checking a coloring against `(nK_2, C_L)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodReport {
    pub n: usize,
    pub cycle_length: usize,
    pub nu_red: usize,
    pub stripe_found: bool,
    /// A maximum red matching, present when it has at least `n` edges.
    pub stripe_witness: Option<MatchingWitness>,
    pub cycle_witness: Option<CycleWitness>,
    pub is_good: bool,
}

/// Checks whether `coloring` has neither a red `nK_2` nor a blue `C_L`.
pub fn verify_good(coloring: &Coloring, n: usize, cycle_length: usize) -> GoodReport {
    assert!(n >= 1, "n must be positive");
    let (nu_red, matching) = detect::matching_number(coloring.red());
    let stripe_found = nu_red >= n;
    let cycle_witness = detect::find_cycle(&coloring.blue(), cycle_length);
    GoodReport {
        n,
        cycle_length,
        nu_red,
        stripe_found,
        stripe_witness: stripe_found.then_some(matching),
        is_good: !stripe_found && cycle_witness.is_none(),
        cycle_witness,
    }
}

/// A family of colorings of `K_{j×t}` parameterised by `(j, n)`.
pub trait Construction: Send + Sync {
    fn name(&self) -> &'static str;

    fn regime(&self) -> Regime;

    fn description(&self) -> &'static str;

    fn build(&self, j: usize, n: usize, t: usize) -> Result<Coloring>;
}

/// Red = every host edge with both ends in `members`.
fn induced_red(shape: &PartiteShape, members: impl Fn(usize) -> bool) -> Result<Coloring> {
    let n = shape.total_vertices();
    let pairs = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| shape.is_host_pair(u, v) && members(u) && members(v));
    Ok(Coloring::new(EdgeSet::from_pairs(shape, pairs)?))
}

struct CliqueSuffix;

impl Construction for CliqueSuffix {
    fn name(&self) -> &'static str {
        "clique"
    }

    fn regime(&self) -> Regime {
        Regime::Value2Clique
    }

    fn description(&self) -> &'static str {
        "red clique on the last j-3 vertices of K_j; blue is K_3 + (j-3)K_1"
    }

    fn build(&self, j: usize, _n: usize, t: usize) -> Result<Coloring> {
        if j < 3 {
            return Err(Error::NoWitness(format!("clique needs j >= 3, got {j}")));
        }
        let shape = PartiteShape::uniform(j, t)?;
        let first = shape.total_vertices() - (j - 3);
        induced_red(&shape, |v| v >= first)
    }
}

struct Stars;

impl Construction for Stars {
    fn name(&self) -> &'static str {
        "stars"
    }

    fn regime(&self) -> Regime {
        Regime::Value2Stars
    }

    fn description(&self) -> &'static str {
        "red = every host edge at the first n-1 vertices; blue is the host on the rest"
    }

    fn build(&self, j: usize, n: usize, t: usize) -> Result<Coloring> {
        let shape = PartiteShape::uniform(j, t)?;
        let centers = (n - 1).min(shape.total_vertices());
        let total = shape.total_vertices();
        let pairs = (0..centers)
            .flat_map(|u| (0..total).map(move |v| (u, v)))
            .filter(|&(u, v)| shape.is_host_pair(u, v));
        Ok(Coloring::new(EdgeSet::from_pairs(&shape, pairs)?))
    }
}

struct Cone;

impl Construction for Cone {
    fn name(&self) -> &'static str {
        "cone"
    }

    fn regime(&self) -> Regime {
        Regime::Value3Cone
    }

    fn description(&self) -> &'static str {
        "red = host on {x_1^1} and parts 3..j, i.e. K_1 + K_{(j-2)x2}; blue is P_3 + (2j-3)K_1 - e"
    }

    fn build(&self, j: usize, _n: usize, t: usize) -> Result<Coloring> {
        if j < 3 {
            return Err(Error::NoWitness(format!("cone needs j >= 3, got {j}")));
        }
        let shape = PartiteShape::uniform(j, t)?;
        let rest = shape.part_range(2).start;
        induced_red(&shape, |v| v == 0 || v >= rest)
    }
}

struct BipartiteSplit;

impl Construction for BipartiteSplit {
    fn name(&self) -> &'static str {
        "bipartite-split"
    }

    fn regime(&self) -> Regime {
        Regime::GeneralFormula
    }

    fn description(&self) -> &'static str {
        "red = host on parts 2..j, K_{(j-1)xt}; blue = K_{t,(j-1)t} is bipartite"
    }

    fn build(&self, j: usize, _n: usize, t: usize) -> Result<Coloring> {
        let shape = PartiteShape::uniform(j, t)?;
        let rest = shape.part_range(0).end;
        induced_red(&shape, |v| v >= rest)
    }
}

struct AllBlue;

impl Construction for AllBlue {
    fn name(&self) -> &'static str {
        "all-blue"
    }

    fn regime(&self) -> Regime {
        Regime::Infinite
    }

    fn description(&self) -> &'static str {
        "no red edges; on K_{2xt} blue is bipartite"
    }

    fn build(&self, j: usize, _n: usize, t: usize) -> Result<Coloring> {
        Ok(Coloring::all_blue(&PartiteShape::uniform(j, t)?))
    }
}

/// Named constructions.
pub struct ConstructionRegistry {
    entries: Vec<Box<dyn Construction>>,
}

impl Default for ConstructionRegistry {
    fn default() -> Self {
        Self::standard()
    }
}

impl ConstructionRegistry {
    pub fn empty() -> Self {
        ConstructionRegistry { entries: Vec::new() }
    }

    /// The five built-in families.
    pub fn standard() -> Self {
        let mut r = Self::empty();
        r.register(Box::new(AllBlue));
        r.register(Box::new(CliqueSuffix));
        r.register(Box::new(Stars));
        r.register(Box::new(Cone));
        r.register(Box::new(BipartiteSplit));
        r
    }

    /// Adds `c`, replacing any construction with the same name.
    pub fn register(&mut self, c: Box<dyn Construction>) {
        self.entries.retain(|e| e.name() != c.name());
        self.entries.push(c);
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.iter().map(|e| e.name()).collect()
    }

    pub fn get(&self, name: &str) -> Result<&dyn Construction> {
        self.entries
            .iter()
            .find(|e| e.name() == name)
            .map(|e| e.as_ref())
            .ok_or_else(|| Error::UnknownStrategy {
                kind: "construction",
                name: name.to_string(),
                known: self.names().join(", "),
            })
    }

    pub fn for_regime(&self, regime: Regime) -> Option<&dyn Construction> {
        self.entries
            .iter()
            .find(|e| e.regime() == regime)
            .map(|e| e.as_ref())
    }

    /// Builds with `name` at `K_{j×t}` and checks the result is good.
    pub fn build_verified(&self, name: &str, j: usize, n: usize, t: usize) -> Result<Coloring> {
        let c = self.get(name)?;
        let coloring = c.build(j, n, t)?;
        if !verify_good(&coloring, n, 7).is_good {
            return Err(Error::ConstructionFailed { name: name.to_string(), j, n });
        }
        Ok(coloring)
    }
}

/// The host size the lower-bound witness lives on: `m - 1`, or the
/// caller's choice for the infinite row. `None` when `m = 1`.
pub fn witness_host_size(value: RamseyValue, infinite_t: usize) -> Option<usize> {
    match value {
        RamseyValue::Infinite => Some(infinite_t),
        RamseyValue::Finite(1) => None,
        RamseyValue::Finite(m) => Some(m - 1),
    }
}

/// Extremal coloring for `(j, n)`, verified good; `None` when the value is 1.
pub fn lower_bound_coloring(j: usize, n: usize) -> Result<Option<Coloring>> {
    lower_bound_coloring_at(&ConstructionRegistry::standard(), j, n, DEFAULT_INFINITE_T)
}

/// [`lower_bound_coloring`] with an explicit registry and the `K_{2×T}` size
/// used for the infinite row.
pub fn lower_bound_coloring_at(
    registry: &ConstructionRegistry,
    j: usize,
    n: usize,
    infinite_t: usize,
) -> Result<Option<Coloring>> {
    let eval = ramsey_value(j, n)?;
    let Some(t) = witness_host_size(eval.value, infinite_t) else {
        return Ok(None);
    };
    let c = registry.for_regime(eval.regime).ok_or_else(|| {
        Error::NoWitness(format!("no construction registered for regime {}", eval.regime))
    })?;
    registry.build_verified(c.name(), j, n, t).map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clique_witness_j7_n4() {
        let c = lower_bound_coloring(7, 4).unwrap().unwrap();
        assert_eq!(c.shape().parts(), &[1; 7]);
        assert_eq!(c.red().len(), 6);
        let r = verify_good(&c, 4, 7);
        assert_eq!(r.nu_red, 2);
        assert!(r.is_good);
    }

    #[test]
    fn cone_witness_j5_n4() {
        let c = lower_bound_coloring(5, 4).unwrap().unwrap();
        assert_eq!(c.shape().parts(), &[2; 5]);
        let red = c.red().graph();
        // 2j - 3 = 7 red vertices
        assert_eq!(red.support().count_ones(), 7);
        let r = verify_good(&c, 4, 7);
        assert_eq!(r.nu_red, 3);
        assert!(r.is_good);
        // blue: three hubs x_2^1, x_1^2, x_2^2 carry every blue edge
        for (u, v) in c.blue().pairs() {
            assert!([1, 2, 3].contains(&u) || [1, 2, 3].contains(&v));
        }
    }

    #[test]
    fn bipartite_split_j5_n10() {
        let c = lower_bound_coloring(5, 10).unwrap().unwrap();
        assert_eq!(c.shape().parts(), &[4; 5]);
        let r = verify_good(&c, 10, 7);
        assert_eq!(r.nu_red, 8);
        assert!(r.is_good);
        assert!(c.blue().graph().is_bipartite());
        assert_eq!(c.blue().len(), 4 * 16);
    }

    #[test]
    fn value_one_has_no_witness() {
        assert!(lower_bound_coloring(8, 2).unwrap().is_none());
        assert!(lower_bound_coloring(11, 4).unwrap().is_none());
    }

    #[test]
    fn stars_cover_n2_j7() {
        let c = lower_bound_coloring(7, 2).unwrap().unwrap();
        assert_eq!(c.red().len(), 6);
        assert!(verify_good(&c, 2, 7).is_good);
        // the clique family fails here: K_4 holds 2K_2
        let reg = ConstructionRegistry::standard();
        assert!(matches!(
            reg.build_verified("clique", 7, 2, 1),
            Err(Error::ConstructionFailed { .. })
        ));
    }

    #[test]
    fn infinite_row_is_all_blue() {
        let c = lower_bound_coloring_at(&ConstructionRegistry::standard(), 2, 9, 6)
            .unwrap()
            .unwrap();
        assert_eq!(c.shape().parts(), &[6, 6]);
        assert!(c.red().is_empty());
    }

    #[test]
    fn verify_good_examples() {
        let s = PartiteShape::uniform(2, 5).unwrap();
        let r = verify_good(&Coloring::all_red(&s), 2, 7);
        assert!(r.stripe_found && !r.is_good);
        assert_eq!(r.stripe_witness.unwrap().len(), 5);
        assert!(verify_good(&Coloring::all_blue(&s), 2, 7).is_good);
        let clique = lower_bound_coloring(7, 3).unwrap().unwrap();
        assert!(verify_good(&clique, 3, 7).is_good);
    }

    #[test]
    fn every_grid_cell_has_a_good_witness() {
        for j in 2..=12 {
            for n in 2..=12 {
                let eval = ramsey_value(j, n).unwrap();
                let Some(c) = lower_bound_coloring(j, n).unwrap() else {
                    assert_eq!(eval.value, RamseyValue::Finite(1));
                    continue;
                };
                let report = verify_good(&c, n, 7);
                assert!(report.is_good, "(j, n) = ({j}, {n})");
                if let RamseyValue::Finite(m) = eval.value {
                    assert_eq!(c.shape().parts()[0], m - 1);
                }
                match eval.regime {
                    Regime::GeneralFormula => {
                        let t = c.shape().parts()[0];
                        assert!((j - 1) * t < 2 * n, "(j, n) = ({j}, {n})");
                        assert!(c.blue().graph().is_bipartite());
                    }
                    Regime::Value2Clique => {
                        assert!(j - 3 < 2 * n);
                        assert_eq!(c.red().graph().support().count_ones() as usize,
                                   if j > 4 { j - 3 } else { 0 });
                    }
                    _ => {}
                }
            }
        }
    }

    #[test]
    fn registry_lookup() {
        let reg = ConstructionRegistry::standard();
        assert_eq!(reg.names().len(), 5);
        assert!(matches!(reg.get("nope"), Err(Error::UnknownStrategy { .. })));
        for regime in Regime::ALL {
            assert_eq!(reg.for_regime(regime).is_some(), regime != Regime::Value1);
        }
    }
}
