//! Abstract curve configurations: components labeled by ambient surface
//! pairs, triple points, and the resulting Hodge data.
//!
//! A configuration lists curve components, each living on the
//! intersection of two ambient pieces `(i, j)` with `i < j`, together
//! with triple points where three components through the pairs
//! `(i1,i2), (i1,i3), (i2,i3)` of a common index triple meet. The
//! combinatorics is as in the polytope picture but is allowed to stand
//! alone, so mirror-inconsistent inputs can be studied too.

use num_bigint::BigInt;


use crate::error::{Error, Result};
use crate::linalg::{rank_exact, IntMatrix};
use crate::mirror::{HodgeDiamond, PerverseCurveInvariants};

/// One curve component on the ambient pair `pair`, of the given genus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurveComponent {
    pub id: u32,
    pub pair: (u32, u32),
    pub genus: u64,
}

/// A point where three components meet.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TriplePoint {
    pub component_ids: [u32; 3],
}

/// A validated curve configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveConfiguration {
    ambient_count: u32,
    components: Vec<CurveComponent>,
    triple_points: Vec<TriplePoint>,
}

impl CurveConfiguration {
    /// Validates and stores a configuration.
    ///
    /// Rules: at least one component; unique component ids; every pair
    /// `(i, j)` with `1 <= i < j <= ambient_count`; every triple point
    /// references three distinct existing components whose pairs are
    /// exactly the three pairs of one ambient index triple.
    pub fn new(
        ambient_count: u32,
        components: Vec<CurveComponent>,
        triple_points: Vec<TriplePoint>,
    ) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidConfiguration("no components".into()));
        }
        let mut ids = std::collections::HashSet::new();
        for c in &components {
            if !ids.insert(c.id) {
                return Err(Error::InvalidConfiguration(format!(
                    "duplicate component id {}",
                    c.id
                )));
            }
            let (i, j) = c.pair;
            if i < 1 || i >= j || j > ambient_count {
                return Err(Error::InvalidConfiguration(format!(
                    "component {} has pair ({i}, {j}) outside 1 <= i < j <= {ambient_count}",
                    c.id
                )));
            }
        }
        let by_id: std::collections::HashMap<u32, &CurveComponent> =
            components.iter().map(|c| (c.id, c)).collect();
        for (t, tp) in triple_points.iter().enumerate() {
            let [a, b, c] = tp.component_ids;
            if a == b || a == c || b == c {
                return Err(Error::InvalidConfiguration(format!(
                    "triple point {t} repeats a component"
                )));
            }
            let mut pairs = Vec::with_capacity(3);
            for id in tp.component_ids {
                let comp = by_id.get(&id).ok_or_else(|| {
                    Error::InvalidConfiguration(format!(
                        "triple point {t} references unknown component {id}"
                    ))
                })?;
                pairs.push(comp.pair);
            }
            let mut indices: Vec<u32> =
                pairs.iter().flat_map(|&(i, j)| [i, j]).collect();
            indices.sort_unstable();
            indices.dedup();
            if indices.len() != 3 {
                return Err(Error::InvalidConfiguration(format!(
                    "triple point {t} does not sit over three ambient pieces"
                )));
            }
            let (i1, i2, i3) = (indices[0], indices[1], indices[2]);
            let mut expected = vec![(i1, i2), (i1, i3), (i2, i3)];
            let mut got = pairs.clone();
            expected.sort_unstable();
            got.sort_unstable();
            if expected != got {
                return Err(Error::InvalidConfiguration(format!(
                    "triple point {t} has incoherent pair labels {pairs:?}"
                )));
            }
        }
        Ok(CurveConfiguration { ambient_count, components, triple_points })
    }

    pub fn ambient_count(&self) -> u32 {
        self.ambient_count
    }

    pub fn components(&self) -> &[CurveComponent] {
        &self.components
    }

    pub fn triple_points(&self) -> &[TriplePoint] {
        &self.triple_points
    }

    pub fn total_genus(&self) -> u64 {
        self.components.iter().map(|c| c.genus).sum()
    }
}

/// The boundary matrix of the configuration: one row per triple point,
/// one column per component (in listed order).
///
/// For a triple point over ambient indices `i1 < i2 < i3` the component
/// on `(i2,i3)` gets +1, on `(i1,i3)` gets -1, and on `(i1,i2)` gets +1.
/// With no triple points the matrix has zero rows and one column per
/// component.
pub fn delta_matrix(cfg: &CurveConfiguration) -> IntMatrix {
    let cols = cfg.components.len();
    let col_of: std::collections::HashMap<u32, usize> =
        cfg.components.iter().enumerate().map(|(k, c)| (c.id, k)).collect();
    let mut m = IntMatrix::zero(cfg.triple_points.len(), cols);
    for (row, tp) in cfg.triple_points.iter().enumerate() {
        let comps: Vec<&CurveComponent> = tp
            .component_ids
            .iter()
            .map(|id| cfg.components.iter().find(|c| c.id == *id).unwrap())
            .collect();
        let mut indices: Vec<u32> =
            comps.iter().flat_map(|c| [c.pair.0, c.pair.1]).collect();
        indices.sort_unstable();
        indices.dedup();
        let (i1, i2, i3) = (indices[0], indices[1], indices[2]);
        for comp in comps {
            let sign: i64 = if comp.pair == (i2, i3) {
                1
            } else if comp.pair == (i1, i3) {
                -1
            } else {
                debug_assert_eq!(comp.pair, (i1, i2));
                1
            };
            *m.at_mut(row, col_of[&comp.id]) = BigInt::from(sign);
        }
    }
    m
}

/// Hodge diamond together with the weight-graded pieces of h10.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConfigHodge {
    pub diamond: HodgeDiamond,
    /// Contribution of the component genera to h10.
    pub h1_from_genera: u64,
    /// Contribution of triple-point cycles, `n - rank(delta)`.
    pub h1_from_cycles: u64,
    pub delta_rank: u64,
    pub component_count: u64,
    pub triple_point_count: u64,
    pub total_genus: u64,
}

/// Full Hodge data of a configuration.
pub fn config_hodge_detail(cfg: &CurveConfiguration) -> ConfigHodge {
    let m = cfg.components.len() as u64;
    let n = cfg.triple_points.len() as u64;
    let g = cfg.total_genus();
    let r = rank_exact(&delta_matrix(cfg)) as u64;
    let h00 = m - r;
    let h10 = g + (n - r);
    ConfigHodge {
        diamond: HodgeDiamond { h00, h10, h01: h10, h11: h00 },
        h1_from_genera: g,
        h1_from_cycles: n - r,
        delta_rank: r,
        component_count: m,
        triple_point_count: n,
        total_genus: g,
    }
}

/// Hodge diamond of the configuration's curve.
pub fn config_hodge(cfg: &CurveConfiguration) -> HodgeDiamond {
    config_hodge_detail(cfg).diamond
}

/// Euler number from the components, `sum(2 - 2 g_i) - 2 n`, checked
/// against the alternating sum of the diamond.
pub fn config_euler(cfg: &CurveConfiguration) -> Result<i64> {
    let from_components: i64 = cfg
        .components
        .iter()
        .map(|c| 2 - 2 * c.genus as i64)
        .sum::<i64>()
        - 2 * cfg.triple_points.len() as i64;
    let from_diamond = config_hodge(cfg).euler();
    if from_components != from_diamond {
        return Err(Error::InternalInconsistency(format!(
            "configuration Euler routes disagree: {from_components} vs {from_diamond}"
        )));
    }
    Ok(from_components)
}

/// Comparison of a configuration against the invariants computed from a
/// reflexive polytope. Reported, not asserted: disagreement means the
/// configuration does not come from that polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub delta_rank: u64,
    pub b1_gamma: u64,
    pub rank_matches_b1: bool,
    pub config_diamond: HodgeDiamond,
    pub polytope_diamond: HodgeDiamond,
    pub diamonds_match: bool,
}

/// Checks whether the configuration reproduces the polytope data: the
/// rank of delta against the first Betti number of the dual graph, and
/// the two Hodge diamonds.
pub fn batyrev_consistency(
    cfg: &CurveConfiguration,
    inv: &PerverseCurveInvariants,
) -> Result<ConsistencyReport> {
    let delta_rank = rank_exact(&delta_matrix(cfg)) as u64;
    let config_diamond = config_hodge(cfg);
    let polytope_diamond = inv.hodge_diamond()?;
    Ok(ConsistencyReport {
        delta_rank,
        b1_gamma: inv.b1_gamma,
        rank_matches_b1: delta_rank == inv.b1_gamma,
        config_diamond,
        polytope_diamond,
        diamonds_match: config_diamond == polytope_diamond,
    })
}
