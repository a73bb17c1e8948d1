//! Admissibility of colouring parameters `(b, c)` for `k` distances, and
//! the constructive pipeline that produces circulant graphs (and, when
//! `b + c` is a prime power, perfect colourings) witnessing admissibility.
//!
//! With `N = (b + c) / gcd(b, c)`, the parameters are admissible iff
//! `b + c <= 2k + (b + c) / q^t` for every prime power `q^t` dividing `N`.
//! It suffices to test the largest such `t` for each prime.

use num_integer::Integer;
use thiserror::Error;

use crate::arith;
use crate::coloring::{
    a_polynomial, is_perfect_coloring, structured_tile, tiling_to_coloring, CirculantSpec, Coloring,
    ColoringError,
};
use crate::cyclotomic::{cyclotomic, divisor_spectrum, DivisorSpectrum, SpectrumError};
use crate::tiling::{construct_multitiling, construct_tiling_prime_power, MultitilingWitness, TilingError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdmissibilityError {
    #[error("b, c and k must be positive (got b = {b}, c = {c}, k = {k})")]
    NonPositiveParameters { b: u64, c: u64, k: u64 },
    #[error("graph condition needs P >= 2 (got {0})")]
    ModulusTooSmall(u64),
    #[error("parameters violate the admissibility bound")]
    Inadmissible(AdmissibilityVerdict),
    #[error("b + c = {sum} is not a prime power")]
    NotPrimePowerSum { sum: u64 },
    #[error("b + c = {sum} exceeds 2k + gcd(b, c) = {bound}")]
    BoundViolated { sum: u64, bound: u64 },
    #[error(transparent)]
    Tiling(#[from] TilingError),
    #[error(transparent)]
    Spectrum(#[from] SpectrumError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ParamTriple {
    b: u64,
    c: u64,
    k: u64,
}

impl ParamTriple {
    pub fn new(b: u64, c: u64, k: u64) -> Result<Self, AdmissibilityError> {
        if b == 0 || c == 0 || k == 0 {
            return Err(AdmissibilityError::NonPositiveParameters { b, c, k });
        }
        Ok(Self { b, c, k })
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn c(&self) -> u64 {
        self.c
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn sum(&self) -> u64 {
        self.b + self.c
    }

    pub fn gcd(&self) -> u64 {
        self.b.gcd(&self.c)
    }

    /// `N = (b + c) / gcd(b, c)`; at least 2 for positive `b, c`.
    pub fn reduced_sum(&self) -> u64 {
        self.sum() / self.gcd()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub q: u64,
    pub t: u32,
    /// `2k + (b + c) / q^t`, which `b + c` exceeds.
    pub bound: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibilityVerdict {
    pub admissible: bool,
    pub violations: Vec<Violation>,
}

pub fn check_admissible(params: ParamTriple) -> AdmissibilityVerdict {
    let sum = params.sum();
    let violations: Vec<Violation> = arith::factorize(params.reduced_sum())
        .into_iter()
        .filter_map(|(q, t)| {
            let bound = 2 * params.k + sum / q.pow(t);
            (sum > bound).then_some(Violation { q, t, bound })
        })
        .collect();
    AdmissibilityVerdict {
        admissible: violations.is_empty(),
        violations,
    }
}

/// Cyclotomic data of `A(x)` over the divisors of `P`, and the resulting
/// divisibility test `N | S̃_P(1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphVerdict {
    pub modulus: u64,
    pub spectrum: DivisorSpectrum,
    /// `S_P(1)`, evaluated factor by factor.
    pub s_at_one: i64,
    /// `S̃_P(1)`.
    pub s_tilde_at_one: u64,
    pub reduced_sum: u64,
    pub passes: bool,
    /// `P` is a prime power, so `passes` is also sufficient for a perfect
    /// colouring of this very graph.
    pub exact: bool,
}

pub fn check_graph_condition(spec: &CirculantSpec, b: u64, c: u64) -> Result<GraphVerdict, AdmissibilityError> {
    let modulus = spec.modulus();
    if modulus < 2 {
        return Err(AdmissibilityError::ModulusTooSmall(modulus));
    }
    let params = ParamTriple::new(b, c, spec.k())?;
    let spectrum = divisor_spectrum(&a_polynomial(spec, b, c), modulus)?;
    let s_at_one = spectrum
        .divisors()
        .iter()
        .map(|&n| cyclotomic(n).eval_at(1).expect("Φ_n(1) fits"))
        .product();
    let s_tilde_at_one = spectrum.prime_power_product_at_one();
    let reduced_sum = params.reduced_sum();
    Ok(GraphVerdict {
        modulus,
        passes: s_tilde_at_one % reduced_sum == 0,
        exact: arith::is_prime_power(modulus),
        spectrum,
        s_at_one,
        s_tilde_at_one,
        reduced_sum,
    })
}

/// Distance residues chosen for one prime-power factor `q^t ∥ N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeResidues {
    pub q: u64,
    pub t: u32,
    /// `q^t` for odd `q`, `2^{t+1}` for `q = 2`.
    pub modulus: u64,
    /// `k` residues in ascending order.
    pub residues: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionWitness {
    pub params: ParamTriple,
    pub spec: CirculantSpec,
    pub per_prime: Vec<PrimeResidues>,
    /// Minimal CRT solutions in `[0, P)`, before lifting.
    pub crt_distances: Vec<u64>,
    /// Present only when a 0/1 tiling was built.
    pub coloring: Option<Coloring>,
}

fn push_copies(out: &mut Vec<u64>, value: u64, copies: u64) {
    out.extend(std::iter::repeat_n(value, copies as usize));
}

/// Residues `l'_1..l'_k` making `Φ_{q^j} | A(x)` for the relevant `j`,
/// whenever the bound for `q^t` holds.
fn prime_residues(params: ParamTriple, q: u64, t: u32) -> PrimeResidues {
    let sum = params.sum() as i64;
    let loop_weight = sum - 2 * params.k as i64;
    let qt = q.pow(t);
    let w = params.sum() / qt;
    let wi = w as i64;
    let mut residues = Vec::with_capacity(params.k as usize);
    let modulus = if q > 2 {
        let zeros = (wi - loop_weight) / 2;
        push_copies(&mut residues, 0, zeros as u64);
        for r in 1..=(qt - 1) / 2 {
            push_copies(&mut residues, r, w);
        }
        qt
    } else if w.is_multiple_of(2) {
        let zeros = (wi - loop_weight) / 2;
        push_copies(&mut residues, 0, zeros as u64);
        let half = qt / 2;
        for r in 1..half {
            push_copies(&mut residues, r, w);
        }
        push_copies(&mut residues, half, w / 2);
        2 * qt
    } else {
        // A(x) ≡ x^M ((w - 1) + x) (1 + x^2 + ... + x^{2^{t+1} - 2})  (mod x^{2^{t+1}} - 1)
        let zeros = (wi - 1 - loop_weight) / 2;
        push_copies(&mut residues, 0, zeros as u64);
        for r in 1..qt {
            push_copies(&mut residues, r, if r % 2 == 1 { 1 } else { w - 1 });
        }
        push_copies(&mut residues, qt, (w - 1) / 2);
        2 * qt
    };
    debug_assert_eq!(residues.len() as u64, params.k, "residue count for q = {q}, t = {t}");
    debug_assert!(residues.windows(2).all(|p| p[0] <= p[1]));
    PrimeResidues { q, t, modulus, residues }
}

/// Builds a circulant graph `C_P(l_1..l_k)` whose structured tile admits a
/// `c`-multitiling, with `P = N` for odd `N` and `P = 2N` for even `N`.
pub fn construct_distances(params: ParamTriple) -> Result<ConstructionWitness, AdmissibilityError> {
    let verdict = check_admissible(params);
    if !verdict.admissible {
        return Err(AdmissibilityError::Inadmissible(verdict));
    }
    let n = params.reduced_sum();
    let modulus = if n.is_multiple_of(2) { 2 * n } else { n };
    let per_prime: Vec<PrimeResidues> = arith::factorize(n)
        .into_iter()
        .map(|(q, t)| prime_residues(params, q, t))
        .collect();

    let crt_distances: Vec<u64> = (0..params.k as usize)
        .map(|j| {
            let congruences: Vec<(u64, u64)> =
                per_prime.iter().map(|pr| (pr.residues[j], pr.modulus)).collect();
            arith::crt(&congruences).expect("prime-power moduli are coprime")
        })
        .collect();

    // Distance lifted by multiples of P, which every per-prime modulus divides.
    let threshold = per_prime.iter().map(|pr| pr.q.pow(pr.t + 1)).max().unwrap_or(0);
    let mut distances = crt_distances.clone();
    let top = (0..distances.len())
        .max_by_key(|&j| (distances[j], j))
        .expect("k >= 1");
    while distances[top] <= threshold {
        distances[top] += modulus;
    }

    let spec = CirculantSpec::new(modulus, distances)?;
    let graph = check_graph_condition(&spec, params.b, params.c)?;
    assert!(graph.passes, "constructed graph fails the cyclotomic condition: {spec:?}");
    Ok(ConstructionWitness {
        params,
        spec,
        per_prime,
        crt_distances,
        coloring: None,
    })
}

/// A `c`-multitiling by the structured tile of a constructed graph; the
/// certificate available when no 0/1 tiling is guaranteed.
pub fn multitiling_certificate(witness: &ConstructionWitness) -> Result<MultitilingWitness, AdmissibilityError> {
    let p = witness.params;
    let u = structured_tile(&witness.spec, p.b, p.c);
    Ok(construct_multitiling(&u, p.c as i64)?)
}

/// A perfect `(b, c)` colouring of a circulant graph with `k` distances,
/// for `b + c` a prime power and `b + c <= 2k + gcd(b, c)`.
pub fn construct_perfect_coloring(params: ParamTriple) -> Result<ConstructionWitness, AdmissibilityError> {
    let sum = params.sum();
    if !arith::is_prime_power(sum) {
        return Err(AdmissibilityError::NotPrimePowerSum { sum });
    }
    let bound = 2 * params.k + params.gcd();
    if sum > bound {
        return Err(AdmissibilityError::BoundViolated { sum, bound });
    }
    let mut witness = construct_distances(params)?;
    let u = structured_tile(&witness.spec, params.b, params.c);
    let tiling = construct_tiling_prime_power(&u, params.c as i64)?;
    let coloring = tiling_to_coloring(&tiling.tile, params.b, params.c)?;
    assert!(is_perfect_coloring(&witness.spec, &coloring)?);
    witness.coloring = Some(coloring);
    Ok(witness)
}
