//! Closed formulas for the Wiener polarity index.
//!
//! For any cactus, `W_p` equals the edge degree term minus fixed corrections
//! for short cycles and pendant patterns:
//!
//! ```text
//! W_p = Σ_{uv ∈ E} (deg(u) − 1)(deg(v) − 1) − 3·c6 − 5·c5 − 4·c4 − 3·c3 − 2·b1 − b2
//! ```
//!
//! where `c_i` counts cycles of length `i`, `b1` counts induced
//! triangle-with-pendant subgraphs, and `b2` induced
//! quadrangle-with-pendant subgraphs. The degree term counts the 3-edge
//! walks `u'–u–v–v'`; each correction removes the walks whose endpoints are
//! closer than 3 or that double-count a distance-3 pair inside a hexagon or
//! pendant quadrangle.
//!
//! When every triangle and quadrangle has exactly one external neighbor,
//! `c3 = b1` and `c4 = b2`, collapsing the corrections to
//! `3·c6 + 5·(c3 + c4 + c5)`.
//!
//! On top of these sit per-family piecewise closed forms for the four chain
//! k-gon cactus families, plus their degree-term closed forms.

use crate::blocks::{self, CactusCensus};
use crate::error::{Error, Result};
use crate::family::{Family, FamilySpec};
use crate::graph::Graph;

/// Evaluates the cactus polarity formula from an already-computed census.
///
/// Panics if the census is inconsistent (the corrections exceed the degree
/// term, which cannot happen for a census taken from a real cactus).
pub fn wp_from_census(census: &CactusCensus) -> u64 {
    let correction = 3 * census.c6
        + 5 * census.c5
        + 4 * census.c4
        + 3 * census.c3
        + 2 * census.b1
        + census.b2;
    census
        .degree_term
        .checked_sub(correction)
        .expect("polarity formula is non-negative on cactus input")
}

/// Wiener polarity index of a connected cactus via the closed formula.
///
/// Near-linear: one block decomposition plus one pass over the edges.
/// Agrees exactly with [`crate::distance::count_distance3_pairs`].
pub fn wp_cactus(g: &Graph) -> Result<u64> {
    let bd = blocks::biconnected_blocks(g)?;
    let census = blocks::census(g, &bd)?;
    Ok(wp_from_census(&census))
}

/// True iff every triangle and quadrangle of the cactus has exactly one
/// external neighbor, i.e. `Σ_{v ∈ block} (deg(v) − 2) = 1` for each 3- and
/// 4-cycle block.
pub fn simplified_formula_applicable(g: &Graph) -> Result<bool> {
    let bd = blocks::biconnected_blocks(g)?;
    if !bd.is_cactus() {
        return Err(Error::NotCactus);
    }
    Ok(bd
        .blocks
        .iter()
        .filter(|b| matches!(b.cycle_length(), Some(3 | 4)))
        .all(|b| {
            let external: usize =
                b.vertices.iter().map(|&v| g.neighbors(v).len() - 2).sum();
            external == 1
        }))
}

/// Simplified polarity formula for cactuses where every triangle and
/// quadrangle has exactly one external neighbor:
/// `degree term − 3·c6 − 5·(c3 + c4 + c5)`.
pub fn wp_simplified(g: &Graph) -> Result<u64> {
    if !simplified_formula_applicable(g)? {
        return Err(Error::NotApplicable);
    }
    let bd = blocks::biconnected_blocks(g)?;
    let census = blocks::census(g, &bd)?;
    let correction = 3 * census.c6 + 5 * (census.c3 + census.c4 + census.c5);
    Ok(census
        .degree_term
        .checked_sub(correction)
        .expect("simplified formula is non-negative when applicable"))
}

/// Piecewise closed form for the Wiener polarity index of a chain k-gon
/// cactus family member. Requires at least two gons.
pub fn closed_form(spec: &FamilySpec) -> Result<u64> {
    let (k, h) = closed_form_domain(spec)?;
    let value = match spec.family() {
        Family::ChainType1 => match spec.k() {
            3 => 4 * h - 8,
            4 => 8 * h - 12,
            5 => 12 * h - 16,
            6 => 15 * h - 16,
            _ => (k + 12) * h - 16,
        },
        Family::ChainType2 => match spec.k() {
            4 => 4 * h - 4,
            5 => 8 * h - 8,
            6 => 11 * h - 8,
            _ => (k + 8) * h - 8,
        },
        Family::OrthoChain => match spec.k() {
            3 => 5 * h - 6,
            4 => 7 * h - 8,
            5 => 9 * h - 10,
            6 => 12 * h - 10,
            _ => (k + 9) * h - 10,
        },
        Family::MetaChain => match spec.k() {
            4 => 6 * h - 6,
            5 => 8 * h - 8,
            6 => 11 * h - 8,
            _ => (k + 8) * h - 8,
        },
    };
    debug_assert!(value >= 0);
    Ok(value as u64)
}

/// Closed form for the degree term `Σ (deg(u) − 1)(deg(v) − 1)` of a chain
/// family member: `(k+12)h−16` for type-1 chains, `(k+8)h−8` for type-2 and
/// meta chains, `(k+9)h−10` for ortho chains. Requires at least two gons.
pub fn degree_term_closed_form(spec: &FamilySpec) -> Result<u64> {
    let (k, h) = closed_form_domain(spec)?;
    let value = match spec.family() {
        Family::ChainType1 => (k + 12) * h - 16,
        Family::ChainType2 | Family::MetaChain => (k + 8) * h - 8,
        Family::OrthoChain => (k + 9) * h - 10,
    };
    debug_assert!(value >= 0);
    Ok(value as u64)
}

fn closed_form_domain(spec: &FamilySpec) -> Result<(i64, i64)> {
    if spec.h() < 2 {
        return Err(Error::InvalidSpec(format!(
            "closed forms require h >= 2 gons, got h = {}",
            spec.h()
        )));
    }
    Ok((spec.k() as i64, spec.h() as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::count_distance3_pairs;
    use crate::family::generate;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (0..n - 1).map(|i| (i, i + 1))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn triangle_with_pendant() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap()
    }

    fn quadrangle_with_pendant() -> Graph {
        Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)]).unwrap()
    }

    fn bowtie() -> Graph {
        Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
    }

    fn spec(family: Family, k: usize, h: usize) -> FamilySpec {
        FamilySpec::new(family, k, h, None).unwrap()
    }

    #[test]
    fn wp_on_trees_is_the_degree_term() {
        // P4: one interior edge contributes (2−1)(2−1) = 1.
        assert_eq!(wp_cactus(&path(4)).unwrap(), 1);
        assert_eq!(count_distance3_pairs(&path(4)).unwrap(), 1);
    }

    #[test]
    fn wp_on_pendant_patterns() {
        // Triangle + pendant: degree term 5, corrections 3·1 + 2·1.
        assert_eq!(wp_cactus(&triangle_with_pendant()).unwrap(), 0);
        // Quadrangle + pendant: degree term 6, corrections 4·1 + 1.
        assert_eq!(wp_cactus(&quadrangle_with_pendant()).unwrap(), 1);
        assert_eq!(count_distance3_pairs(&quadrangle_with_pendant()).unwrap(), 1);
    }

    #[test]
    fn wp_matches_family_values() {
        let g = generate(&spec(Family::ChainType1, 6, 2));
        assert_eq!(wp_cactus(&g).unwrap(), 14);
        assert_eq!(count_distance3_pairs(&g).unwrap(), 14);
    }

    #[test]
    fn wp_rejects_non_cactus() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(wp_cactus(&k4), Err(Error::NotCactus));
    }

    #[test]
    fn applicability_predicate() {
        assert_eq!(simplified_formula_applicable(&triangle_with_pendant()), Ok(true));
        assert_eq!(simplified_formula_applicable(&bowtie()), Ok(false));
        // No triangles or quadrangles: vacuously applicable.
        assert_eq!(simplified_formula_applicable(&cycle(6)), Ok(true));
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(simplified_formula_applicable(&k4), Err(Error::NotCactus));
    }

    #[test]
    fn simplified_formula_agrees_when_applicable() {
        for g in [triangle_with_pendant(), quadrangle_with_pendant(), cycle(5), cycle(6)] {
            assert_eq!(wp_simplified(&g).unwrap(), wp_cactus(&g).unwrap());
        }
        assert_eq!(wp_simplified(&cycle(5)).unwrap(), 0);
        assert_eq!(wp_simplified(&bowtie()), Err(Error::NotApplicable));
    }

    #[test]
    fn closed_form_spot_values() {
        assert_eq!(closed_form(&spec(Family::ChainType1, 5, 3)).unwrap(), 20);
        assert_eq!(closed_form(&spec(Family::ChainType2, 5, 4)).unwrap(), 24);
        assert_eq!(closed_form(&spec(Family::OrthoChain, 7, 2)).unwrap(), 22);
        assert_eq!(closed_form(&spec(Family::MetaChain, 4, 2)).unwrap(), 6);
    }

    #[test]
    fn closed_form_needs_two_gons() {
        let single = FamilySpec::new(Family::ChainType1, 5, 1, None).unwrap();
        assert!(matches!(closed_form(&single), Err(Error::InvalidSpec(_))));
        assert!(matches!(degree_term_closed_form(&single), Err(Error::InvalidSpec(_))));
    }

    #[test]
    fn degree_term_spot_values() {
        assert_eq!(degree_term_closed_form(&spec(Family::ChainType1, 3, 2)).unwrap(), 14);
        assert_eq!(degree_term_closed_form(&spec(Family::MetaChain, 4, 2)).unwrap(), 16);
        assert_eq!(degree_term_closed_form(&spec(Family::OrthoChain, 4, 3)).unwrap(), 29);
    }
}
