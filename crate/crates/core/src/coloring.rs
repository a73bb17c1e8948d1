//! Circulant graphs `C_P(l_1, ..., l_k)`, their perfect 2-colourings, and
//! the correspondence with `c`-tilings by the structured tile
//! `u = (b + c - 2k) δ_M + Σ_i (δ_{M + l_i} + δ_{M - l_i})`.
//!
//! Vertex `g` is adjacent to `g + l_i` and `g - l_i` for every `i`, so the
//! neighbour multiset always has `2k` entries. A distance `l_i ≡ 0 (mod P)`
//! contributes `g` itself twice.

use std::fmt;

use thiserror::Error;

use crate::poly::IntPolynomial;
use crate::tiling::Tile;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("modulus must be at least 1")]
    ZeroModulus,
    #[error("a circulant graph needs at least one distance")]
    NoDistances,
    #[error("colouring parameters must be positive (got b = {b}, c = {c})")]
    NonPositiveParameters { b: u64, c: u64 },
    #[error("colouring has {coloring} vertices but the graph has {graph}")]
    ModulusMismatch { graph: u64, coloring: u64 },
    #[error("tile value {value} at residue {index} is not 0 or 1")]
    NotZeroOne { index: usize, value: i64 },
    #[error("invalid colour character {0:?} (expected 'B' or 'W')")]
    InvalidColor(char),
    #[error("a colouring needs at least one vertex")]
    Empty,
}

/// The circulant graph on `ℤ/Pℤ` with the given distance multiset.
///
/// Distances are kept exactly as given: no reduction modulo `P`, no
/// deduplication, zeros allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CirculantSpec {
    modulus: u64,
    distances: Vec<u64>,
}

impl CirculantSpec {
    pub fn new(modulus: u64, distances: Vec<u64>) -> Result<Self, ColoringError> {
        if modulus == 0 {
            return Err(ColoringError::ZeroModulus);
        }
        if distances.is_empty() {
            return Err(ColoringError::NoDistances);
        }
        Ok(Self { modulus, distances })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn distances(&self) -> &[u64] {
        &self.distances
    }

    /// Number of distances (half the degree).
    pub fn k(&self) -> u64 {
        self.distances.len() as u64
    }

    /// `M = max l_i`, over the raw values.
    pub fn max_distance(&self) -> u64 {
        *self.distances.iter().max().expect("nonempty")
    }

    /// The `2k` neighbours of `g`, with multiplicity.
    pub fn neighbours(&self, g: u64) -> impl Iterator<Item = u64> + '_ {
        let p = self.modulus;
        let g = g % p;
        self.distances.iter().flat_map(move |&l| {
            let l = l % p;
            [(g + l) % p, (g + p - l) % p]
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn swapped(self) -> Self {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Color::Black => 'B',
            Color::White => 'W',
        }
    }
}

impl TryFrom<char> for Color {
    type Error = ColoringError;

    fn try_from(ch: char) -> Result<Self, Self::Error> {
        match ch {
            'B' => Ok(Color::Black),
            'W' => Ok(Color::White),
            other => Err(ColoringError::InvalidColor(other)),
        }
    }
}

/// A black/white assignment to `ℤ/Pℤ` together with the target
/// parameters `(b, c)`.
///
/// Monochromatic assignments are representable; they are never perfect
/// because `b, c > 0` forces both classes to be nonempty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<Color>,
    b: u64,
    c: u64,
}

impl Coloring {
    pub fn new(colors: Vec<Color>, b: u64, c: u64) -> Result<Self, ColoringError> {
        if b == 0 || c == 0 {
            return Err(ColoringError::NonPositiveParameters { b, c });
        }
        if colors.is_empty() {
            return Err(ColoringError::Empty);
        }
        Ok(Self { colors, b, c })
    }

    /// Parses a string over `{B, W}`.
    pub fn parse(s: &str, b: u64, c: u64) -> Result<Self, ColoringError> {
        let colors = s.chars().map(Color::try_from).collect::<Result<Vec<_>, _>>()?;
        Self::new(colors, b, c)
    }

    /// Black where bit `g` of `mask` is set.
    pub fn from_bits(mask: u64, modulus: u64, b: u64, c: u64) -> Result<Self, ColoringError> {
        let colors = (0..modulus)
            .map(|g| if mask >> g & 1 == 1 { Color::Black } else { Color::White })
            .collect();
        Self::new(colors, b, c)
    }

    pub fn modulus(&self) -> u64 {
        self.colors.len() as u64
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn c(&self) -> u64 {
        self.c
    }

    /// Colours exchanged, parameters exchanged to match.
    pub fn swapped(&self) -> Self {
        Self {
            colors: self.colors.iter().map(|c| c.swapped()).collect(),
            b: self.c,
            c: self.b,
        }
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.colors.iter().try_for_each(|c| write!(f, "{}", c.as_char()))
    }
}

/// `b + c - 2k`, the weight placed at residue `M`.
fn loop_weight(spec: &CirculantSpec, b: u64, c: u64) -> i64 {
    b as i64 + c as i64 - 2 * spec.k() as i64
}

/// The tile `u_{l_1..l_k; b, c; P}`; its value at `M mod P` may be negative.
pub fn structured_tile(spec: &CirculantSpec, b: u64, c: u64) -> Tile {
    let p = spec.modulus();
    let m = spec.max_distance();
    let mut values = vec![0i64; p as usize];
    values[(m % p) as usize] += loop_weight(spec, b, c);
    for &l in spec.distances() {
        values[((m + l) % p) as usize] += 1;
        values[((m - l) % p) as usize] += 1;
    }
    Tile::new(values).expect("modulus >= 1")
}

/// `A(x) = x^M (b + c - 2k + Σ_i (x^{l_i} + x^{-l_i}))`, of degree at most `2M`.
pub fn a_polynomial(spec: &CirculantSpec, b: u64, c: u64) -> IntPolynomial {
    let m = spec.max_distance() as usize;
    let mut coeffs = vec![0i64; 2 * m + 1];
    coeffs[m] += loop_weight(spec, b, c);
    for &l in spec.distances() {
        coeffs[m + l as usize] += 1;
        coeffs[m - l as usize] += 1;
    }
    IntPolynomial::new(coeffs)
}

/// Every black vertex sees exactly `b` white neighbours and every white
/// vertex exactly `c` black ones (counted with multiplicity).
pub fn is_perfect_coloring(spec: &CirculantSpec, col: &Coloring) -> Result<bool, ColoringError> {
    if spec.modulus() != col.modulus() {
        return Err(ColoringError::ModulusMismatch {
            graph: spec.modulus(),
            coloring: col.modulus(),
        });
    }
    let colors = col.colors();
    Ok((0..spec.modulus()).all(|g| {
        let own = colors[g as usize];
        let opposite = spec
            .neighbours(g)
            .filter(|&h| colors[h as usize] != own)
            .count() as u64;
        match own {
            Color::Black => opposite == col.b(),
            Color::White => opposite == col.c(),
        }
    }))
}

/// `v(g) = 1` on black vertices, `0` on white ones.
pub fn coloring_to_tiling(col: &Coloring) -> Tile {
    let values = col
        .colors()
        .iter()
        .map(|&c| i64::from(c == Color::Black))
        .collect();
    Tile::new(values).expect("colourings are nonempty")
}

pub fn tiling_to_coloring(v: &Tile, b: u64, c: u64) -> Result<Coloring, ColoringError> {
    let colors = v
        .values()
        .iter()
        .enumerate()
        .map(|(index, &value)| match value {
            1 => Ok(Color::Black),
            0 => Ok(Color::White),
            value => Err(ColoringError::NotZeroOne { index, value }),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Coloring::new(colors, b, c)
}
