//! Tiles on `ℤ/Pℤ`, multitiling verification, and the cyclotomic existence
//! criterion with its two explicit constructions.
//!
//! A tile `u` and a function `v` form an `m`-multitiling when the cyclic
//! convolution `Σ_h u(g - h) v(h)` equals `m` at every `g`. In terms of
//! mask polynomials this is `Q_u Q_v ≡ m (x^P - 1)/(x - 1)  (mod x^P - 1)`.
//! Such a `v` exists iff `m · d̃_u(1)` is divisible by `Q_u(1)`, where `d̃_u`
//! collects the prime-power cyclotomic factors of `Q_u` that divide
//! `x^P - 1`.

use thiserror::Error;

use crate::arith;
use crate::cyclotomic::{divisor_spectrum, DivisorSpectrum, SpectrumError};
use crate::poly::{IntPolynomial, PolyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TilingError {
    #[error("a tile needs at least one residue")]
    EmptyTile,
    #[error("tiles live on different groups (Z/{left} vs Z/{right})")]
    ModulusMismatch { left: u64, right: u64 },
    #[error("multiplicity must be nonzero")]
    ZeroMultiplicity,
    #[error("no {multiplicity}-multitiling exists for this tile")]
    NotExists { multiplicity: i64 },
    #[error("modulus {modulus} is not a prime power")]
    NotPrimePower { modulus: u64 },
    #[error("multiplicity {multiplicity} outside 1..={max}")]
    MultiplicityOutOfRange { multiplicity: i64, max: i64 },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl From<SpectrumError> for TilingError {
    fn from(e: SpectrumError) -> Self {
        match e {
            SpectrumError::Poly(p) => TilingError::Poly(p),
            // Callers only build spectra for masks with Q_u(1) != 0.
            SpectrumError::ZeroMask { modulus } => {
                unreachable!("zero mask modulo x^{modulus} - 1 with nonzero value at 1")
            }
        }
    }
}

/// An integer-valued function on `ℤ/Pℤ`, stored as `values[a] = u(a)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tile {
    values: Vec<i64>,
}

impl Tile {
    pub fn new(values: Vec<i64>) -> Result<Self, TilingError> {
        if values.is_empty() {
            return Err(TilingError::EmptyTile);
        }
        Ok(Self { values })
    }

    pub fn zeros(modulus: u64) -> Self {
        assert!(modulus >= 1);
        Self {
            values: vec![0; modulus as usize],
        }
    }

    /// Indicator `δ_g` of the residue `g mod P`.
    pub fn delta(g: u64, modulus: u64) -> Self {
        let mut t = Self::zeros(modulus);
        t.values[(g % modulus) as usize] = 1;
        t
    }

    /// Reads a tile off a polynomial folded modulo `x^P - 1`.
    pub fn from_mask(f: &IntPolynomial, modulus: u64) -> Result<Self, TilingError> {
        let folded = f.reduce_mod_cyclic(modulus as usize)?;
        Ok(Self {
            values: (0..modulus as usize).map(|a| folded.coeff(a)).collect(),
        })
    }

    pub fn modulus(&self) -> u64 {
        self.values.len() as u64
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn is_zero_one(&self) -> bool {
        self.values.iter().all(|&x| x == 0 || x == 1)
    }
}

/// `Q_u(x) = Σ u(a) x^a`.
pub fn mask_polynomial(u: &Tile) -> IntPolynomial {
    IntPolynomial::new(u.values.clone())
}

fn same_group(u: &Tile, v: &Tile) -> Result<(), TilingError> {
    if u.modulus() != v.modulus() {
        return Err(TilingError::ModulusMismatch {
            left: u.modulus(),
            right: v.modulus(),
        });
    }
    Ok(())
}

/// `(u * v)(g) = Σ_h u(g - h) v(h)` over `ℤ/Pℤ`.
pub fn cyclic_convolution(u: &Tile, v: &Tile) -> Result<Vec<i64>, TilingError> {
    same_group(u, v)?;
    let n = u.values.len();
    let mut out = vec![0i64; n];
    for (h, &vh) in v.values.iter().enumerate() {
        if vh == 0 {
            continue;
        }
        for (a, &ua) in u.values.iter().enumerate() {
            let g = (a + h) % n;
            let term = ua.checked_mul(vh).ok_or(PolyError::Overflow)?;
            out[g] = out[g].checked_add(term).ok_or(PolyError::Overflow)?;
        }
    }
    Ok(out)
}

/// True iff the cyclic convolution of `u` and `v` is constantly `m`.
pub fn verify_multitiling(u: &Tile, v: &Tile, m: i64) -> Result<bool, TilingError> {
    Ok(cyclic_convolution(u, v)?.iter().all(|&x| x == m))
}

/// Polynomial form of the multitiling condition: does
/// `Q_u Q_v - m (x^P - 1)/(x - 1)` vanish modulo `x^P - 1`?
pub fn satisfies_mask_identity(u: &Tile, v: &Tile, m: i64) -> Result<bool, TilingError> {
    same_group(u, v)?;
    let p = u.modulus() as usize;
    let lhs = mask_polynomial(u).mul(&mask_polynomial(v))?;
    let target = IntPolynomial::geometric(p).scale(m)?;
    Ok(lhs.sub(&target)?.reduce_mod_cyclic(p)?.is_zero())
}

/// Outcome of the existence criterion, with the quantities it compares.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExistenceVerdict {
    pub exists: bool,
    pub multiplicity: i64,
    /// `Q_u(1)`.
    pub mask_at_one: i64,
    /// `d̃_u(1)`; absent when `Q_u(1) = 0`, where the criterion fails outright.
    pub prime_power_product_at_one: Option<u64>,
    pub spectrum: Option<DivisorSpectrum>,
}

pub fn multitiling_exists(u: &Tile, m: i64) -> Result<ExistenceVerdict, TilingError> {
    if m == 0 {
        return Err(TilingError::ZeroMultiplicity);
    }
    let mask = mask_polynomial(u);
    let mask_at_one = mask.eval_at(1)?;
    if mask_at_one == 0 {
        return Ok(ExistenceVerdict {
            exists: false,
            multiplicity: m,
            mask_at_one,
            prime_power_product_at_one: None,
            spectrum: None,
        });
    }
    let spectrum = divisor_spectrum(&mask, u.modulus())?;
    let tilde_at_one = spectrum.prime_power_product_at_one();
    let exists = (m as i128 * tilde_at_one as i128) % mask_at_one as i128 == 0;
    Ok(ExistenceVerdict {
        exists,
        multiplicity: m,
        mask_at_one,
        prime_power_product_at_one: Some(tilde_at_one),
        spectrum: Some(spectrum),
    })
}

/// A multitiling `v` together with the multiplier `R_v` of
/// `Q_v = R_v · (x^P - 1) / ((x - 1) d_u)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultitilingWitness {
    pub tile: Tile,
    pub multiplier: IntPolynomial,
    pub multiplicity: i64,
}

struct Certificate {
    spectrum: DivisorSpectrum,
    mask_at_one: i64,
    /// `d_u(x)`.
    divisor_product: IntPolynomial,
    /// `(x^P - 1) / ((x - 1) d_u(x))`.
    cofactor: IntPolynomial,
    /// `m d_u(1) / Q_u(1)`.
    multiplier_at_one: i64,
}

fn certificate(u: &Tile, m: i64) -> Result<Certificate, TilingError> {
    let verdict = multitiling_exists(u, m)?;
    if !verdict.exists {
        return Err(TilingError::NotExists { multiplicity: m });
    }
    let spectrum = verdict.spectrum.expect("present when the criterion passes");
    let divisor_product = spectrum.full_product()?;
    let d_at_one = divisor_product.eval_at(1)?;
    let cofactor = IntPolynomial::geometric(u.modulus() as usize).exact_div(&divisor_product)?;
    Ok(Certificate {
        spectrum,
        mask_at_one: verdict.mask_at_one,
        divisor_product,
        cofactor,
        multiplier_at_one: m * d_at_one / verdict.mask_at_one,
    })
}

/// The constant-multiplier multitiling `R_v = m d_u(1) / Q_u(1)`.
pub fn construct_multitiling(u: &Tile, m: i64) -> Result<MultitilingWitness, TilingError> {
    let cert = certificate(u, m)?;
    let multiplier = IntPolynomial::constant(cert.multiplier_at_one);
    let q_v = cert.cofactor.mul(&multiplier)?;
    let tile = Tile::from_mask(&q_v, u.modulus())?;
    debug_assert!(verify_multitiling(u, &tile, m)?);
    Ok(MultitilingWitness {
        tile,
        multiplier,
        multiplicity: m,
    })
}

/// A 0/1 `m`-tiling for a tile on `ℤ/q^tℤ`.
///
/// `d_u` is then a product of `Φ_{q^r}`, all of whose coefficients are 0 or
/// 1; `R_v` is the sum of its lowest `m d_u(1) / Q_u(1)` monomials.
pub fn construct_tiling_prime_power(u: &Tile, m: i64) -> Result<MultitilingWitness, TilingError> {
    let modulus = u.modulus();
    if !arith::is_prime_power(modulus) {
        return Err(TilingError::NotPrimePower { modulus });
    }
    let mask_at_one = mask_polynomial(u).eval_at(1)?;
    if m <= 0 || m > mask_at_one {
        return Err(TilingError::MultiplicityOutOfRange {
            multiplicity: m,
            max: mask_at_one,
        });
    }
    let cert = certificate(u, m)?;
    debug_assert_eq!(cert.mask_at_one, mask_at_one);
    debug_assert!(cert.spectrum.divisors().iter().all(|&n| arith::is_prime_power(n)));

    let d = cert.divisor_product.coeffs();
    assert!(d.iter().all(|&c| c == 0 || c == 1), "d_u has a coefficient outside {{0, 1}}");
    let mut r = vec![0i64; d.len()];
    for (slot, _) in r
        .iter_mut()
        .zip(d)
        .filter(|(_, &c)| c == 1)
        .take(cert.multiplier_at_one as usize)
    {
        *slot = 1;
    }
    let multiplier = IntPolynomial::new(r);
    let q_v = cert.cofactor.mul(&multiplier)?;
    let tile = Tile::from_mask(&q_v, modulus)?;
    assert!(tile.is_zero_one() && verify_multitiling(u, &tile, m)?);
    Ok(MultitilingWitness {
        tile,
        multiplier,
        multiplicity: m,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{rngs::StdRng, Rng, SeedableRng};

    fn t(v: &[i64]) -> Tile {
        Tile::new(v.to_vec()).unwrap()
    }

    #[test]
    fn mask_examples() {
        assert_eq!(mask_polynomial(&t(&[1, 0, 1, 0])).coeffs(), &[1, 0, 1]);
        assert_eq!(mask_polynomial(&t(&[2, 0, 0])).coeffs(), &[2]);
        assert_eq!(mask_polynomial(&t(&[0, 1, 0, 0, 1])).coeffs(), &[0, 1, 0, 0, 1]);
    }

    #[test]
    fn mask_round_trips_through_tile() {
        let u = t(&[3, 0, -1, 0, 0]);
        assert_eq!(Tile::from_mask(&mask_polynomial(&u), 5).unwrap(), u);
        assert_eq!(Tile::delta(7, 5), t(&[0, 0, 1, 0, 0]));
    }

    #[test]
    fn empty_tile_rejected() {
        assert_eq!(Tile::new(vec![]), Err(TilingError::EmptyTile));
    }

    #[test]
    fn verify_examples() {
        let u = t(&[1, 0, 1, 0]);
        assert!(verify_multitiling(&u, &t(&[1, 1, 0, 0]), 1).unwrap());
        assert!(verify_multitiling(&u, &t(&[1, 1, 1, 1]), 2).unwrap());
        assert!(!verify_multitiling(&u, &t(&[1, 1, 1, 1]), 1).unwrap());
        assert_eq!(
            verify_multitiling(&u, &t(&[1, 1, 1]), 1),
            Err(TilingError::ModulusMismatch { left: 4, right: 3 })
        );
    }

    #[test]
    fn existence_examples() {
        let v = multitiling_exists(&t(&[1, 0, 1, 0]), 1).unwrap();
        assert!(v.exists);
        assert_eq!(v.mask_at_one, 2);
        assert_eq!(v.prime_power_product_at_one, Some(2));

        for m in [-3, 1, 4] {
            let v = multitiling_exists(&t(&[1, -1, 0, 0]), m).unwrap();
            assert!(!v.exists);
            assert_eq!(v.mask_at_one, 0);
        }

        assert!(multitiling_exists(&t(&[1, 0, 0]), 5).unwrap().exists);
        assert_eq!(multitiling_exists(&t(&[1, 0, 0]), 0), Err(TilingError::ZeroMultiplicity));
    }

    #[test]
    fn existence_fails_without_cyclotomic_support() {
        // Q_u = 1 + x on Z/3: no Φ_3 factor, Q_u(1) = 2 does not divide m = 1.
        let v = multitiling_exists(&t(&[1, 1, 0]), 1).unwrap();
        assert!(!v.exists);
        assert!(multitiling_exists(&t(&[1, 1, 0]), 2).unwrap().exists);
        assert_eq!(
            construct_multitiling(&t(&[1, 1, 0]), 1),
            Err(TilingError::NotExists { multiplicity: 1 })
        );
    }

    #[test]
    fn construct_multitiling_examples() {
        let w = construct_multitiling(&t(&[1, 0, 0]), 3).unwrap();
        assert_eq!(w.tile, t(&[3, 3, 3]));
        let w = construct_multitiling(&t(&[1, 0, 1, 0]), 1).unwrap();
        assert_eq!(w.tile, t(&[1, 1, 0, 0]));
        assert_eq!(w.multiplier, IntPolynomial::constant(1));
        let w = construct_multitiling(&t(&[1, 0, 1, 0]), 2).unwrap();
        assert_eq!(w.tile, t(&[2, 2, 0, 0]));
    }

    #[test]
    fn construct_multitiling_negative_multiplicity() {
        let u = t(&[1, 0, 1, 0]);
        let w = construct_multitiling(&u, -2).unwrap();
        assert_eq!(w.tile, t(&[-2, -2, 0, 0]));
        assert!(verify_multitiling(&u, &w.tile, -2).unwrap());
        assert_eq!(
            construct_tiling_prime_power(&u, -2),
            Err(TilingError::MultiplicityOutOfRange { multiplicity: -2, max: 2 })
        );
    }

    #[test]
    fn prime_power_tiling_examples() {
        let u = t(&[1, 0, 1, 0]);
        let w = construct_tiling_prime_power(&u, 1).unwrap();
        assert_eq!(w.tile, t(&[1, 1, 0, 0]));
        assert_eq!(w.multiplier, IntPolynomial::one());
        let w = construct_tiling_prime_power(&u, 2).unwrap();
        assert_eq!(w.tile, t(&[1, 1, 1, 1]));
        assert_eq!(w.multiplier.coeffs(), &[1, 0, 1]);
        assert_eq!(
            construct_tiling_prime_power(&u, 3),
            Err(TilingError::MultiplicityOutOfRange { multiplicity: 3, max: 2 })
        );
        assert_eq!(
            construct_tiling_prime_power(&t(&[1, 0, 0, 0, 0, 1]), 1),
            Err(TilingError::NotPrimePower { modulus: 6 })
        );
    }

    #[test]
    fn witness_multiplier_certificate() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..300 {
            let p = rng.gen_range(1..=12);
            let u = Tile::new((0..p).map(|_| rng.gen_range(-1..=3)).collect()).unwrap();
            let m = rng.gen_range(1..=6);
            let Ok(w) = construct_multitiling(&u, m) else { continue };
            let q1 = mask_polynomial(&u).eval_at(1).unwrap();
            let spectrum = divisor_spectrum(&mask_polynomial(&u), p).unwrap();
            let d1 = spectrum.full_product().unwrap().eval_at(1).unwrap();
            assert_eq!(w.multiplier.eval_at(1).unwrap() * q1, m * d1);
            assert!(verify_multitiling(&u, &w.tile, m).unwrap());
        }
    }

    #[test]
    fn convolution_and_mask_identity_agree() {
        let mut rng = StdRng::seed_from_u64(2024);
        let mut positives = 0;
        for _ in 0..1000 {
            let p = rng.gen_range(1..=20);
            let u = Tile::new((0..p).map(|_| rng.gen_range(-3..=3)).collect()).unwrap();
            let v = Tile::new((0..p).map(|_| rng.gen_range(-3..=3)).collect()).unwrap();
            // Bias m towards the actual convolution value so positives occur.
            let conv = cyclic_convolution(&u, &v).unwrap();
            let m = if rng.gen_bool(0.5) { conv[0] } else { rng.gen_range(-3..=3) };
            let direct = verify_multitiling(&u, &v, m).unwrap();
            positives += direct as usize;
            assert_eq!(direct, satisfies_mask_identity(&u, &v, m).unwrap());
        }
        assert!(positives > 0);
    }

    #[test]
    fn prime_power_constructions_are_zero_one() {
        let mut rng = StdRng::seed_from_u64(99);
        for p in [2u64, 3, 4, 5, 7, 8, 9, 16] {
            let mut built = 0;
            for _ in 0..400 {
                let u = Tile::new((0..p).map(|_| rng.gen_range(0..=2)).collect()).unwrap();
                let q1 = mask_polynomial(&u).eval_at(1).unwrap();
                for m in 1..=q1 {
                    if let Ok(w) = construct_tiling_prime_power(&u, m) {
                        built += 1;
                        assert!(w.tile.is_zero_one());
                        assert!(verify_multitiling(&u, &w.tile, m).unwrap());
                    }
                }
            }
            assert!(built > 0, "no constructions exercised for P = {p}");
        }
    }
}
