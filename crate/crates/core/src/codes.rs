//! Binary linear codes given by generator matrices, with full codeword
//! enumeration for small dimensions.
//!
//! Codewords are bit masks (`u128`), bit `p` standing for coordinate `p`
//! (0-based), so lengths up to 128 are supported.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::xypoly::XYPoly;

pub type Word = u128;

pub const MAX_LENGTH: usize = 128;
/// Largest dimension accepted for full enumeration (2^26 codewords).
pub const MAX_ENUM_DIMENSION: usize = 26;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryCode {
    n: usize,
    rows: Vec<Word>,
}

fn row_mask(n: usize) -> Word {
    if n == 128 {
        Word::MAX
    } else {
        (1u128 << n) - 1
    }
}

/// GF(2) rank by elimination on bit masks.
pub fn gf2_rank(rows: &[Word]) -> usize {
    let mut basis: Vec<Word> = Vec::new();
    for &r in rows {
        let mut v = r;
        for &b in &basis {
            let pivot = 127 - b.leading_zeros();
            if v >> pivot & 1 == 1 {
                v ^= b;
            }
        }
        if v != 0 {
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

impl BinaryCode {
    pub fn new(n: usize, rows: Vec<Word>) -> Result<Self> {
        if n == 0 || n > MAX_LENGTH {
            return Err(Error::InvalidGenerator(format!(
                "length {n} outside 1..={MAX_LENGTH}"
            )));
        }
        if rows.is_empty() {
            return Err(Error::InvalidGenerator("no rows".into()));
        }
        if rows.len() > n {
            return Err(Error::InvalidGenerator(format!(
                "{} rows exceed length {n}",
                rows.len()
            )));
        }
        if let Some(r) = rows.iter().find(|&&r| r & !row_mask(n) != 0) {
            return Err(Error::InvalidGenerator(format!(
                "row {r:#x} wider than {n}"
            )));
        }
        let rank = gf2_rank(&rows);
        if rank != rows.len() {
            return Err(Error::InvalidGenerator(format!(
                "rows are linearly dependent (rank {rank} < {})",
                rows.len()
            )));
        }
        Ok(BinaryCode { n, rows })
    }

    /// Parses the ASCII generator format: one row per line, characters
    /// `0`/`1`, all rows of equal length. Blank lines are ignored.
    pub fn from_ascii(text: &str) -> Result<Self> {
        let mut n = None;
        let mut rows = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            match n {
                None => n = Some(line.len()),
                Some(len) if len != line.len() => {
                    return Err(Error::InvalidGenerator(format!(
                        "line {} has length {}, expected {len}",
                        lineno + 1,
                        line.len()
                    )))
                }
                _ => {}
            }
            if line.len() > MAX_LENGTH {
                return Err(Error::InvalidGenerator(format!(
                    "length {} exceeds {MAX_LENGTH}",
                    line.len()
                )));
            }
            let mut word: Word = 0;
            for (p, ch) in line.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => word |= 1 << p,
                    other => {
                        return Err(Error::InvalidGenerator(format!(
                            "line {}: unexpected character {other:?}",
                            lineno + 1
                        )))
                    }
                }
            }
            rows.push(word);
        }
        let n = n.ok_or_else(|| Error::InvalidGenerator("empty generator file".into()))?;
        BinaryCode::new(n, rows)
    }

    pub fn to_ascii(&self) -> String {
        self.rows
            .iter()
            .map(|&r| {
                (0..self.n)
                    .map(|p| if r >> p & 1 == 1 { '1' } else { '0' })
                    .collect::<String>()
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Word] {
        &self.rows
    }

    fn check_enumerable(&self) -> Result<()> {
        if self.dimension() > MAX_ENUM_DIMENSION {
            return Err(Error::TooLarge {
                k: self.dimension(),
                max: MAX_ENUM_DIMENSION,
            });
        }
        Ok(())
    }

    /// Every codeword, visited in Gray-code order over the message space.
    pub fn codewords(&self) -> Result<Vec<Word>> {
        self.check_enumerable()?;
        let k = self.dimension();
        let mut out = Vec::with_capacity(1 << k);
        let mut word: Word = 0;
        out.push(word);
        for step in 1u64..(1u64 << k) {
            word ^= self.rows[step.trailing_zeros() as usize];
            out.push(word);
        }
        Ok(out)
    }

    /// `A_w` for every weight with `A_w > 0`.
    pub fn weight_distribution(&self) -> Result<BTreeMap<usize, u64>> {
        let mut dist = BTreeMap::new();
        for c in self.codewords()? {
            *dist.entry(c.count_ones() as usize).or_insert(0) += 1;
        }
        Ok(dist)
    }

    /// `Σ_w A_w x^(n-w) y^w`.
    pub fn weight_enumerator(&self) -> Result<XYPoly> {
        let dist = self.weight_distribution()?;
        Ok(XYPoly::from_terms(
            self.n,
            dist.into_iter().map(|(w, a)| (w, BigInt::from(a))),
        ))
    }

    /// `G·Gᵀ = 0` over GF(2).
    pub fn is_self_orthogonal(&self) -> bool {
        self.rows
            .iter()
            .all(|&a| self.rows.iter().all(|&b| (a & b).count_ones() % 2 == 0))
    }

    pub fn is_self_dual(&self) -> bool {
        self.n % 2 == 0 && 2 * self.dimension() == self.n && self.is_self_orthogonal()
    }

    pub fn profile(&self) -> Result<CodeProfile> {
        let dist = self.weight_distribution()?;
        let is_doubly_even = dist.keys().all(|w| w % 4 == 0);
        let min_weight = dist.keys().copied().find(|&w| w > 0).unwrap_or(0);
        Ok(CodeProfile {
            length: self.n,
            dimension: self.dimension(),
            is_self_dual: self.is_self_dual(),
            is_doubly_even,
            min_weight,
            weight_enumerator: XYPoly::from_terms(
                self.n,
                dist.iter().map(|(&w, &a)| (w, BigInt::from(a))),
            ),
            weight_distribution: dist,
        })
    }

    /// Supports of all weight-`w` codewords.
    pub fn support_design(&self, w: usize) -> Result<crate::harmonic_design::SupportDesign> {
        let words = self.codewords()?;
        let blocks: Vec<Word> = words
            .iter()
            .copied()
            .filter(|c| c.count_ones() as usize == w)
            .collect();
        if blocks.is_empty() {
            let mut available: Vec<usize> = words
                .iter()
                .map(|c| c.count_ones() as usize)
                .filter(|&x| x > 0)
                .collect();
            available.sort_unstable();
            available.dedup();
            return Err(Error::EmptyDesign { w, available });
        }
        crate::harmonic_design::SupportDesign::from_masks(self.n, w, blocks)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeProfile {
    pub length: usize,
    pub dimension: usize,
    pub is_self_dual: bool,
    pub is_doubly_even: bool,
    pub min_weight: usize,
    pub weight_enumerator: XYPoly,
    pub weight_distribution: BTreeMap<usize, u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Builtin {
    Golay24,
    Hamming8,
}

impl std::str::FromStr for Builtin {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "golay24" => Ok(Builtin::Golay24),
            "hamming8" => Ok(Builtin::Hamming8),
            other => Err(Error::UnknownCode(other.to_string())),
        }
    }
}

pub fn builtin(name: &str) -> Result<BinaryCode> {
    Ok(match name.parse::<Builtin>()? {
        Builtin::Golay24 => golay24(),
        Builtin::Hamming8 => hamming8(),
    })
}

/// Extended Golay code `[24, 12, 8]` with generator `[I_12 | B]`.
///
/// `B` is the bordered quadratic-residue matrix: row 0 is `0 1 1 … 1`,
/// and for `i = 0..11` row `i + 1` is `1` followed by the circulant whose
/// entry `(i, j)` is 1 iff `j - i mod 11 ∈ {0, 1, 3, 4, 5, 9}` (zero plus
/// the quadratic residues mod 11).
pub fn golay24() -> BinaryCode {
    const RESIDUES: [usize; 6] = [0, 1, 3, 4, 5, 9];
    let mut b = [[0u8; 12]; 12];
    for j in 1..12 {
        b[0][j] = 1;
    }
    for i in 0..11 {
        b[i + 1][0] = 1;
        for j in 0..11 {
            if RESIDUES.contains(&((j + 11 - i) % 11)) {
                b[i + 1][j + 1] = 1;
            }
        }
    }
    let rows = (0..12)
        .map(|i| {
            let mut w: Word = 1 << i;
            for (j, &bit) in b[i].iter().enumerate() {
                if bit == 1 {
                    w |= 1 << (12 + j);
                }
            }
            w
        })
        .collect();
    BinaryCode::new(24, rows).expect("golay generator is full rank")
}

/// Extended Hamming code `[8, 4, 4]` with generator `[I_4 | J - I]`.
pub fn hamming8() -> BinaryCode {
    let rows = (0..4)
        .map(|i| {
            let mut w: Word = 1 << i;
            for j in 0..4 {
                if j != i {
                    w |= 1 << (4 + j);
                }
            }
            w
        })
        .collect();
    BinaryCode::new(8, rows).expect("hamming generator is full rank")
}
