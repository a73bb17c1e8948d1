//! Cyclotomic polynomials and the cyclotomic divisor spectrum of a mask.

use std::collections::{BTreeSet, HashMap};
use std::sync::{OnceLock, RwLock};

use thiserror::Error;

use crate::arith;
use crate::poly::{IntPolynomial, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectrumError {
    #[error("mask polynomial vanishes modulo x^{modulus} - 1")]
    ZeroMask { modulus: u64 },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

static CACHE: OnceLock<RwLock<HashMap<u64, IntPolynomial>>> = OnceLock::new();

fn cache() -> &'static RwLock<HashMap<u64, IntPolynomial>> {
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// The `n`-th cyclotomic polynomial.
///
/// Obtained by dividing `x^n - 1` by `Φ_d` for every proper divisor `d` of
/// `n`; results are memoized process-wide.
///
/// # Panics
///
/// If `n == 0`, or if an intermediate quotient overflows `i64` (far beyond
/// any modulus used by this crate).
pub fn cyclotomic(n: u64) -> IntPolynomial {
    assert!(n >= 1, "cyclotomic polynomials are indexed from 1");
    if let Some(hit) = cache().read().expect("cyclotomic cache poisoned").get(&n) {
        return hit.clone();
    }
    let mut quotient = IntPolynomial::x_pow_minus_one(n as usize);
    for d in arith::divisors(n) {
        if d == n {
            break;
        }
        quotient = quotient
            .exact_div(&cyclotomic(d))
            .unwrap_or_else(|e| panic!("generating Φ_{n}: {e}"));
    }
    cache()
        .write()
        .expect("cyclotomic cache poisoned")
        .entry(n)
        .or_insert(quotient)
        .clone()
}

/// Whether `Φ_n` divides `f` in `ℤ[x]`.
///
/// `f` is folded modulo `x^n - 1` first, which preserves its residue
/// modulo `Φ_n` and keeps the long division short.
pub fn cyclotomic_divides(n: u64, f: &IntPolynomial) -> Result<bool, PolyError> {
    let folded = f.reduce_mod_cyclic(n as usize)?;
    let (_, rem) = folded.div_rem(&cyclotomic(n))?;
    Ok(rem.is_zero())
}

/// The set of `n | P` with `Φ_n | f`, split out by prime-power index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorSpectrum {
    modulus: u64,
    divisors: BTreeSet<u64>,
    prime_power_subset: BTreeSet<u64>,
}

impl DivisorSpectrum {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn divisors(&self) -> &BTreeSet<u64> {
        &self.divisors
    }

    pub fn prime_power_subset(&self) -> &BTreeSet<u64> {
        &self.prime_power_subset
    }

    /// `∏ Φ_n` over every divisor in the spectrum (`d_u`, or `S_P` for a
    /// structured mask).
    pub fn full_product(&self) -> Result<IntPolynomial, PolyError> {
        product_of(self.divisors.iter().copied())
    }

    /// `∏ Φ_n` over the prime-power part (`d̃_u`, or `S̃_P`).
    pub fn prime_power_product(&self) -> Result<IntPolynomial, PolyError> {
        product_of(self.prime_power_subset.iter().copied())
    }

    pub fn prime_power_product_at_one(&self) -> u64 {
        prime_power_product_at_one(self)
    }
}

fn product_of(mut indices: impl Iterator<Item = u64>) -> Result<IntPolynomial, PolyError> {
    indices.try_fold(IntPolynomial::one(), |acc, n| acc.mul(&cyclotomic(n)))
}

/// Cyclotomic divisors of `f` among the `Φ_n` with `n | modulus`.
pub fn divisor_spectrum(f: &IntPolynomial, modulus: u64) -> Result<DivisorSpectrum, SpectrumError> {
    assert!(modulus >= 1, "modulus must be positive");
    let reduced = f.reduce_mod_cyclic(modulus as usize)?;
    if reduced.is_zero() {
        return Err(SpectrumError::ZeroMask { modulus });
    }
    let mut divisors = BTreeSet::new();
    for n in arith::divisors(modulus) {
        if cyclotomic_divides(n, &reduced)? {
            divisors.insert(n);
        }
    }
    let prime_power_subset = divisors
        .iter()
        .copied()
        .filter(|&n| arith::is_prime_power(n))
        .collect();
    Ok(DivisorSpectrum {
        modulus,
        divisors,
        prime_power_subset,
    })
}

/// `∏ p` over the prime powers `p^k` in the spectrum, which equals the
/// value at 1 of the prime-power product since `Φ_{p^k}(1) = p`.
pub fn prime_power_product_at_one(spectrum: &DivisorSpectrum) -> u64 {
    spectrum
        .prime_power_subset
        .iter()
        .map(|&n| arith::prime_power(n).expect("subset holds prime powers").0)
        .product()
}

#[cfg(test)]
pub(crate) fn spectrum_from_parts(modulus: u64, divisors: &[u64]) -> DivisorSpectrum {
    let divisors: BTreeSet<u64> = divisors.iter().copied().collect();
    let prime_power_subset = divisors.iter().copied().filter(|&n| arith::is_prime_power(n)).collect();
    DivisorSpectrum {
        modulus,
        divisors,
        prime_power_subset,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::new(c.to_vec())
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), p(&[-1, 1]));
        assert_eq!(cyclotomic(2), p(&[1, 1]));
        assert_eq!(cyclotomic(4), p(&[1, 0, 1]));
        assert_eq!(cyclotomic(6), p(&[1, -1, 1]));
        assert_eq!(cyclotomic(12), p(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic(9), p(&[1, 0, 0, 1, 0, 0, 1]));
    }

    #[test]
    fn phi_six_by_direct_division() {
        // Independent route: (x^6 - 1) / ((x - 1)(x + 1)(x^2 + x + 1)).
        let denom = p(&[-1, 1]).mul(&p(&[1, 1])).unwrap().mul(&p(&[1, 1, 1])).unwrap();
        let phi6 = IntPolynomial::x_pow_minus_one(6).exact_div(&denom).unwrap();
        assert_eq!(cyclotomic(6), phi6);
    }

    #[test]
    fn phi_105_has_a_minus_two() {
        let phi = cyclotomic(105);
        assert_eq!(phi.degree(), Some(48));
        assert_eq!(phi.coeff(7), -2);
        assert_eq!(phi.coeff(41), -2);
    }

    #[test]
    fn divisibility_examples() {
        assert!(cyclotomic_divides(4, &p(&[1, 0, 1])).unwrap());
        assert!(!cyclotomic_divides(2, &p(&[1, 0, 1])).unwrap());
        assert!(cyclotomic_divides(3, &p(&[1, 0, 1, 0, 1])).unwrap());
        assert!(cyclotomic_divides(6, &p(&[1, 0, 1, 0, 1])).unwrap());
        assert!(!cyclotomic_divides(1, &p(&[1, 0, 1, 0, 1])).unwrap());
    }

    #[test]
    fn spectrum_examples() {
        let s = divisor_spectrum(&p(&[1, 0, 1]), 4).unwrap();
        assert_eq!(s.divisors().iter().copied().collect::<Vec<_>>(), vec![4]);
        assert_eq!(s.prime_power_subset().iter().copied().collect::<Vec<_>>(), vec![4]);

        let s = divisor_spectrum(&p(&[1, 1, 1, 1]), 4).unwrap();
        assert_eq!(s.divisors().iter().copied().collect::<Vec<_>>(), vec![2, 4]);

        let s = divisor_spectrum(&IntPolynomial::one(), 12).unwrap();
        assert!(s.divisors().is_empty());
        assert_eq!(s.prime_power_product_at_one(), 1);
    }

    #[test]
    fn spectrum_contains_one_iff_mask_vanishes_at_one() {
        let s = divisor_spectrum(&p(&[1, -1]), 6).unwrap();
        assert!(s.divisors().contains(&1));
        assert!(!s.prime_power_subset().contains(&1));
    }

    #[test]
    fn zero_mask_is_rejected() {
        let f = IntPolynomial::x_pow_minus_one(3);
        assert_eq!(divisor_spectrum(&f, 3), Err(SpectrumError::ZeroMask { modulus: 3 }));
    }

    #[test]
    fn product_at_one_examples() {
        assert_eq!(prime_power_product_at_one(&spectrum_from_parts(4, &[2, 4])), 4);
        assert_eq!(prime_power_product_at_one(&spectrum_from_parts(4, &[4])), 2);
        assert_eq!(prime_power_product_at_one(&spectrum_from_parts(4, &[])), 1);
        assert_eq!(prime_power_product_at_one(&spectrum_from_parts(12, &[1, 3, 6, 12])), 3);
    }

    #[test]
    fn cache_is_safe_under_concurrent_readers() {
        let handles: Vec<_> = (0..8)
            .map(|i| std::thread::spawn(move || cyclotomic(200 + i)))
            .collect();
        for (i, h) in handles.into_iter().enumerate() {
            let phi = h.join().unwrap();
            assert_eq!(phi.degree(), Some(arith::euler_phi(200 + i as u64) as usize));
        }
    }

    proptest! {
        #[test]
        fn spectrum_is_invariant_under_cyclic_reduction(
            coeffs in prop::collection::vec(0i64..=3, 1..30), modulus in 1u64..=16
        ) {
            let f = IntPolynomial::new(coeffs);
            let reduced = f.reduce_mod_cyclic(modulus as usize).unwrap();
            prop_assume!(!reduced.is_zero());
            prop_assert_eq!(divisor_spectrum(&f, modulus).unwrap(), divisor_spectrum(&reduced, modulus).unwrap());
        }

        #[test]
        fn full_and_prime_power_products_agree_at_one(
            coeffs in prop::collection::vec(-2i64..=3, 1..20), modulus in 1u64..=24
        ) {
            let f = IntPolynomial::new(coeffs);
            let Ok(s) = divisor_spectrum(&f, modulus) else { return Ok(()) };
            prop_assume!(!s.divisors().contains(&1));
            let full_at_one = s.full_product().unwrap().eval_at(1).unwrap();
            prop_assert_eq!(full_at_one as u64, s.prime_power_product_at_one());
            prop_assert_eq!(s.prime_power_product().unwrap().eval_at(1).unwrap() as u64, s.prime_power_product_at_one());
        }
    }
}
