//! Exhaustive search over all `2^P` black/white assignments.
//!
//! Assignments are visited as binary counters with vertex 0 in the least
//! significant bit and Black = 1, so results come out in a fixed order.
//! Nothing here uses polynomials; it is the independent ground truth for
//! the cyclotomic criteria.

use thiserror::Error;

use crate::coloring::{CirculantSpec, Coloring, ColoringError};
use crate::tiling::Tile;

/// Largest modulus searched exhaustively without an explicit limit.
pub const MAX_EXHAUSTIVE_MODULUS: u64 = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("modulus {modulus} too large for exhaustive search (max {max})")]
    TooLarge { modulus: u64, max: u64 },
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport {
    pub spec: CirculantSpec,
    pub b: u64,
    pub c: u64,
    pub found: Vec<Coloring>,
    /// Every state was examined, so `found` is complete.
    pub exhausted: bool,
    pub states_examined: u64,
}

/// Perfect `(b, c)` colourings of `spec`, stopping after `limit` hits.
///
/// Without a limit the modulus must not exceed [`MAX_EXHAUSTIVE_MODULUS`];
/// with one, anything up to 63 vertices is accepted.
pub fn search_colorings(
    spec: &CirculantSpec,
    b: u64,
    c: u64,
    limit: Option<usize>,
) -> Result<SearchReport, OracleError> {
    let p = spec.modulus();
    let max = if limit.is_some() { 63 } else { MAX_EXHAUSTIVE_MODULUS };
    if p > max {
        return Err(OracleError::TooLarge { modulus: p, max });
    }
    // Validates b, c up front.
    Coloring::from_bits(0, p, b, c)?;

    let neighbours: Vec<Vec<u32>> = (0..p)
        .map(|g| spec.neighbours(g).map(|h| h as u32).collect())
        .collect();
    let perfect = |mask: u64| {
        neighbours.iter().enumerate().all(|(g, nbrs)| {
            let black = mask >> g & 1 == 1;
            let opposite = nbrs
                .iter()
                .filter(|&&h| (mask >> h & 1 == 1) != black)
                .count() as u64;
            opposite == if black { b } else { c }
        })
    };

    let total = 1u64 << p;
    let mut found = Vec::new();
    let mut states_examined = 0;
    for mask in 0..total {
        states_examined += 1;
        if perfect(mask) {
            found.push(Coloring::from_bits(mask, p, b, c)?);
            if limit.is_some_and(|l| found.len() >= l) {
                break;
            }
        }
    }
    Ok(SearchReport {
        spec: spec.clone(),
        b,
        c,
        found,
        exhausted: states_examined == total,
        states_examined,
    })
}

/// Every 0/1 tile `v` whose cyclic convolution with `u` is constantly `m`.
pub fn search_tilings(u: &Tile, m: i64) -> Result<Vec<Tile>, OracleError> {
    let p = u.modulus();
    if p > MAX_EXHAUSTIVE_MODULUS {
        return Err(OracleError::TooLarge {
            modulus: p,
            max: MAX_EXHAUSTIVE_MODULUS,
        });
    }
    let n = p as usize;
    let values = u.values();
    let is_tiling = |mask: u64| {
        (0..n).all(|g| {
            let total: i64 = (0..n)
                .filter(|&h| mask >> h & 1 == 1)
                .map(|h| values[(g + n - h) % n])
                .sum();
            total == m
        })
    };
    Ok((0..1u64 << p)
        .filter(|&mask| is_tiling(mask))
        .map(|mask| {
            Tile::new((0..n).map(|h| (mask >> h & 1) as i64).collect()).expect("nonempty")
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::is_perfect_coloring;

    fn spec(p: u64, l: &[u64]) -> CirculantSpec {
        CirculantSpec::new(p, l.to_vec()).unwrap()
    }

    fn strings(r: &SearchReport) -> Vec<String> {
        r.found.iter().map(|c| c.to_string()).collect()
    }

    #[test]
    fn coloring_search_examples() {
        let r = search_colorings(&spec(4, &[1]), 1, 1, None).unwrap();
        assert!(r.exhausted);
        assert_eq!(r.states_examined, 16);
        // Counter order: 0011, 0110, 1001, 1100 read from vertex 0.
        assert_eq!(strings(&r), vec!["BBWW", "WBBW", "BWWB", "WWBB"]);

        let r = search_colorings(&spec(3, &[1]), 1, 1, None).unwrap();
        assert!(r.exhausted && r.found.is_empty());

        let r = search_colorings(&spec(2, &[1]), 2, 2, None).unwrap();
        assert_eq!(strings(&r), vec!["BW", "WB"]);
    }

    #[test]
    fn limit_truncates() {
        let r = search_colorings(&spec(4, &[1]), 1, 1, Some(2)).unwrap();
        assert_eq!(r.found.len(), 2);
        assert!(!r.exhausted);
        assert!(r.found.iter().all(|c| is_perfect_coloring(&r.spec, c).unwrap()));
    }

    #[test]
    fn large_moduli_need_a_limit() {
        let s = spec(25, &[1]);
        assert_eq!(
            search_colorings(&s, 1, 1, None),
            Err(OracleError::TooLarge { modulus: 25, max: 24 })
        );
        // C_28(1) has the period-4 colouring BBWW...
        let r = search_colorings(&spec(28, &[1]), 1, 1, Some(1)).unwrap();
        assert_eq!(r.found.len(), 1);
        assert!(is_perfect_coloring(&r.spec, &r.found[0]).unwrap());
    }

    #[test]
    fn tiling_search_examples() {
        let u = Tile::new(vec![1, 0, 1, 0]).unwrap();
        let got: Vec<Vec<i64>> = search_tilings(&u, 1).unwrap().iter().map(|t| t.values().to_vec()).collect();
        assert_eq!(got, vec![vec![1, 1, 0, 0], vec![0, 1, 1, 0], vec![1, 0, 0, 1], vec![0, 0, 1, 1]]);
        let got = search_tilings(&u, 2).unwrap();
        assert_eq!(got, vec![Tile::new(vec![1, 1, 1, 1]).unwrap()]);
        assert!(search_tilings(&Tile::new(vec![1, 0, 0]).unwrap(), 2).unwrap().is_empty());
        assert!(matches!(search_tilings(&Tile::zeros(30), 1), Err(OracleError::TooLarge { .. })));
    }
}
