//! The genus-2 mapping class group on the five chain twists `g1..g5`.
//!
//! # Conventions
//!
//! A [`MappingClassWord`] `g_{i1}^{e1} ⋯ g_{ik}^{ek}` denotes the functional
//! composition of twists, rightmost first. Every representation below is a
//! homomorphism for that product, and the twist along a transported curve is
//! `t_{w(c)} = w · t_c · w⁻¹`.
//!
//! Identity testing goes through the hyperelliptic quotient. Every mapping
//! class of the closed genus-2 surface commutes with the hyperelliptic
//! involution `ι`, and dividing by `ι` gives the mapping class group of the
//! sphere with six marked points, with `g_i` becoming the half-twist `σ_i`
//! that exchanges points `i` and `i+1`. That group acts faithfully (up to
//! inner automorphisms) on the rank-5 free group
//! `⟨x1..x6 | x1⋯x6 = 1⟩`, with `x6 = (x1⋯x5)⁻¹` eliminated. So a word acts
//! by an inner automorphism exactly when it equals `1` or `ι`, and the action
//! on first homology (`+I` versus `−I`) separates the two.
//!
//! Homology uses the ordered basis `(A1, B1, A2, B2)` with `⟨A_i, B_i⟩ = 1`
//! and chain classes `[c1]=A1, [c2]=B1, [c3]=A1+A2, [c4]=B2, [c5]=A2`. The
//! positive twist acts as `v ↦ v + ⟨v, c⟩ c`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::freegroup::{self, FreeAutomorphism, Word};

pub const GENERATORS: u8 = 5;
const RANK: usize = 5;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum McgError {
    #[error("generator index {0} is outside 1..=5")]
    BadGenerator(i64),
    #[error("zero exponent")]
    ZeroExponent,
    #[error("unknown base curve {0:?}")]
    UnknownBase(String),
}

/// A word in the chain twists. Adjacent syllables always have distinct
/// generators and exponents are never zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct MappingClassWord {
    syllables: Vec<(u8, i32)>,
}

impl MappingClassWord {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn generator(i: u8) -> Result<Self, McgError> {
        Self::from_syllables(&[(i as i64, 1)])
    }

    /// Builds and normalizes a word; zero exponents are dropped and equal
    /// neighbours merged.
    pub fn from_syllables(raw: &[(i64, i64)]) -> Result<Self, McgError> {
        let mut w = Self::empty();
        for &(i, e) in raw {
            if !(1..=GENERATORS as i64).contains(&i) {
                return Err(McgError::BadGenerator(i));
            }
            w.push(i as u8, e as i32);
        }
        Ok(w)
    }

    /// Word from a sequence of positive generators, e.g. `[1, 2, 1]`.
    pub fn from_generators(gens: &[u8]) -> Result<Self, McgError> {
        let raw: Vec<(i64, i64)> = gens.iter().map(|&g| (g as i64, 1)).collect();
        Self::from_syllables(&raw)
    }

    fn push(&mut self, i: u8, e: i32) {
        if e == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some(last) if last.0 == i => {
                last.1 += e;
                if last.1 == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push((i, e)),
        }
    }

    pub fn syllables(&self) -> &[(u8, i32)] {
        &self.syllables
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Total twist count `Σ |e|`.
    pub fn twist_length(&self) -> usize {
        self.syllables
            .iter()
            .map(|s| s.1.unsigned_abs() as usize)
            .sum()
    }

    pub fn inverse(&self) -> Self {
        MappingClassWord {
            syllables: self.syllables.iter().rev().map(|&(i, e)| (i, -e)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for &(i, e) in &other.syllables {
            out.push(i, e);
        }
        out
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Self::empty();
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    pub fn conjugate_by(&self, u: &Self) -> Self {
        u.mul(self).mul(&u.inverse())
    }
}

impl fmt::Display for MappingClassWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return write!(f, "1");
        }
        for (k, &(i, e)) in self.syllables.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            if e == 1 {
                write!(f, "g{i}")?;
            } else {
                write!(f, "g{i}^{e}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for MappingClassWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<[i64; 2]> = self
            .syllables
            .iter()
            .map(|&(i, e)| [i as i64, e as i64])
            .collect();
        pairs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MappingClassWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let pairs: Vec<[i64; 2]> = Vec::deserialize(d)?;
        if pairs.iter().any(|p| p[1] == 0) {
            return Err(serde::de::Error::custom(McgError::ZeroExponent));
        }
        if pairs.iter().any(|p| p[1].abs() > i32::MAX as i64) {
            return Err(serde::de::Error::custom("exponent out of range"));
        }
        let raw: Vec<(i64, i64)> = pairs.iter().map(|p| (p[0], p[1])).collect();
        MappingClassWord::from_syllables(&raw).map_err(serde::de::Error::custom)
    }
}

/// Integer vector in the basis `(A1, B1, A2, B2)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct HomologyClass(pub [i64; 4]);

impl HomologyClass {
    pub const ZERO: HomologyClass = HomologyClass([0; 4]);

    pub fn is_zero(&self) -> bool {
        self.0 == [0; 4]
    }

    /// Algebraic intersection `⟨u, v⟩ = a1·b1' − b1·a1' + a2·b2' − b2·a2'`.
    pub fn intersection(&self, other: &HomologyClass) -> i64 {
        let [a1, b1, a2, b2] = self.0;
        let [c1, d1, c2, d2] = other.0;
        a1 * d1 - b1 * c1 + a2 * d2 - b2 * c2
    }

    pub fn negate(&self) -> HomologyClass {
        HomologyClass(self.0.map(|x| -x))
    }
}

/// 4×4 integer matrix acting on column vectors.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct SymplecticMatrix(pub [[i64; 4]; 4]);

impl SymplecticMatrix {
    pub fn identity() -> Self {
        let mut m = [[0; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        SymplecticMatrix(m)
    }

    pub fn negative_identity() -> Self {
        let mut m = Self::identity();
        for i in 0..4 {
            m.0[i][i] = -1;
        }
        m
    }

    /// `v ↦ v + e·⟨v, c⟩·c`
    pub fn transvection(c: HomologyClass, e: i64) -> Self {
        let mut m = [[0; 4]; 4];
        for k in 0..4 {
            let mut basis = [0; 4];
            basis[k] = 1;
            let coeff = e * HomologyClass(basis).intersection(&c);
            for i in 0..4 {
                m[i][k] = basis[i] + coeff * c.0[i];
            }
        }
        SymplecticMatrix(m)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut m = [[0; 4]; 4];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (0..4).map(|k| self.0[i][k] * other.0[k][j]).sum();
            }
        }
        SymplecticMatrix(m)
    }

    pub fn apply(&self, v: &HomologyClass) -> HomologyClass {
        let mut out = [0; 4];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..4).map(|k| self.0[i][k] * v.0[k]).sum();
        }
        HomologyClass(out)
    }

    /// Checks `MᵀJM = J` for the form pairing `A_i` with `B_i`.
    pub fn is_symplectic(&self) -> bool {
        let basis = |k: usize| {
            let mut v = [0; 4];
            v[k] = 1;
            HomologyClass(v)
        };
        (0..4).all(|i| {
            (0..4).all(|j| {
                let lhs = self.apply(&basis(i)).intersection(&self.apply(&basis(j)));
                lhs == basis(i).intersection(&basis(j))
            })
        })
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn is_negative_identity(&self) -> bool {
        *self == Self::negative_identity()
    }
}

/// Homology class of chain curve `c_i`.
pub fn chain_class(i: u8) -> HomologyClass {
    HomologyClass(match i {
        1 => [1, 0, 0, 0],
        2 => [0, 1, 0, 0],
        3 => [1, 0, 1, 0],
        4 => [0, 0, 0, 1],
        5 => [0, 0, 1, 0],
        _ => panic!("chain index {i} outside 1..=5"),
    })
}

pub fn homology_action(w: &MappingClassWord) -> SymplecticMatrix {
    w.syllables
        .iter()
        .fold(SymplecticMatrix::identity(), |acc, &(i, e)| {
            acc.mul(&SymplecticMatrix::transvection(chain_class(i), e as i64))
        })
}

/// One step of the half-twist `σ_i` (or its inverse) on a reduced word of the
/// rank-5 free group.
fn half_twist_images(i: u8, inverse: bool) -> [Word; RANK] {
    let x = |k: i32| Word::from_signed(&[k]).unwrap();
    let mut images: [Word; RANK] = std::array::from_fn(|k| x(k as i32 + 1));
    let i = i as i32;
    if i < 5 {
        let (a, b) = (i, i + 1);
        let ia = a as usize - 1;
        let ib = b as usize - 1;
        if !inverse {
            images[ia] = Word::from_signed(&[a, b, -a]).unwrap();
            images[ib] = x(a);
        } else {
            images[ia] = x(b);
            images[ib] = Word::from_signed(&[-b, a, b]).unwrap();
        }
    } else if !inverse {
        // x5 ↦ x5 x6 x5⁻¹ with x6 = (x1 x2 x3 x4 x5)⁻¹
        images[4] = Word::from_signed(&[-4, -3, -2, -1, -5]).unwrap();
    } else {
        // x5 ↦ x6
        images[4] = Word::from_signed(&[-5, -4, -3, -2, -1]).unwrap();
    }
    images
}

/// The generator's half-twist as a checked automorphism.
pub fn half_twist(i: u8) -> FreeAutomorphism {
    FreeAutomorphism::from_images(
        half_twist_images(i, false).to_vec(),
        half_twist_images(i, true).to_vec(),
    )
    .expect("half-twist tables are mutually inverse")
}

struct TwistTables {
    forward: [[Word; RANK]; 5],
    backward: [[Word; RANK]; 5],
}

fn tables() -> &'static TwistTables {
    static TABLES: std::sync::OnceLock<TwistTables> = std::sync::OnceLock::new();
    TABLES.get_or_init(|| TwistTables {
        forward: std::array::from_fn(|k| half_twist_images(k as u8 + 1, false)),
        backward: std::array::from_fn(|k| half_twist_images(k as u8 + 1, true)),
    })
}

/// Image of a single free-group word under the action of `w`, by iterated
/// substitution from the rightmost syllable.
pub fn act_on_word(w: &MappingClassWord, x: &Word) -> Word {
    act_on_word_capped(w, x, None).expect("no cap")
}

/// As [`act_on_word`], giving up once an intermediate word exceeds `cap`.
fn act_on_word_capped(w: &MappingClassWord, x: &Word, cap: Option<usize>) -> Option<Word> {
    let t = tables();
    let mut cur = x.clone();
    for &(i, e) in w.syllables.iter().rev() {
        let table = if e > 0 {
            &t.forward[i as usize - 1]
        } else {
            &t.backward[i as usize - 1]
        };
        for _ in 0..e.unsigned_abs() {
            cur = freegroup::substitute(table, &cur);
        }
        if cap.is_some_and(|c| cur.len() > c) {
            return None;
        }
    }
    Some(cur)
}

fn image_table(w: &MappingClassWord) -> Vec<Word> {
    image_table_capped(w, None).expect("no cap")
}

fn image_table_capped(w: &MappingClassWord, cap: Option<usize>) -> Option<Vec<Word>> {
    use rayon::prelude::*;
    (1..=RANK as u32)
        .into_par_iter()
        .map(|k| act_on_word_capped(w, &Word::generator(k), cap))
        .collect()
}

/// The automorphism of the rank-5 free group induced by `w`.
pub fn bh_automorphism(w: &MappingClassWord) -> FreeAutomorphism {
    let forward = image_table(w);
    let backward = image_table(&w.inverse());
    FreeAutomorphism::from_images(forward, backward)
        .expect("products of half-twists are automorphisms")
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum Verdict {
    Identity,
    HyperellipticInvolution,
    NotIdentity,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct IdentityCertificate {
    pub verdict: Verdict,
    pub homology_check: SymplecticMatrix,
    /// Conjugator realizing the induced automorphism as an inner one, when it
    /// is inner. Written as signed letters of the rank-5 free group.
    #[serde(with = "opt_word")]
    pub innerness_conjugator: Option<Word>,
}

mod opt_word {
    use super::Word;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(w: &Option<Word>, s: S) -> Result<S::Ok, S::Error> {
        w.as_ref().map(|w| w.to_signed()).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<Word>, D::Error> {
        let raw: Option<Vec<i32>> = Option::deserialize(d)?;
        raw.map(|r| Word::from_signed(&r).map_err(serde::de::Error::custom))
            .transpose()
    }
}

/// Decides whether `w` is trivial, the hyperelliptic involution, or neither.
///
/// A cyclic rotation of the word is split in half and the two halves are
/// compared up to an inner automorphism, which keeps intermediate free-group
/// words short.
pub fn is_identity(w: &MappingClassWord) -> IdentityCertificate {
    let homology = homology_action(w);
    if !homology.is_identity() && !homology.is_negative_identity() {
        return IdentityCertificate {
            verdict: Verdict::NotIdentity,
            homology_check: homology,
            innerness_conjugator: None,
        };
    }
    // Rotating to `w' = Q P` from `w = P Q` conjugates by `P`, which keeps
    // both verdicts. Several cut points are tried under a growing length cap.
    let candidates = rotation_candidates(w, 4);
    let mut cap = 1usize << 12;
    loop {
        for &r in &candidates {
            if let Some(found) = compare_halves(w, r, Some(cap)) {
                return finish(homology, found);
            }
        }
        if cap > usize::MAX / 8 {
            return finish(homology, compare_halves(w, candidates[0], None).unwrap());
        }
        cap *= 4;
    }
}

fn finish(homology: SymplecticMatrix, conjugator: Option<Word>) -> IdentityCertificate {
    let verdict = match (&conjugator, homology.is_identity()) {
        (None, _) => Verdict::NotIdentity,
        (Some(_), true) => Verdict::Identity,
        (Some(_), false) => Verdict::HyperellipticInvolution,
    };
    IdentityCertificate {
        verdict,
        homology_check: homology,
        innerness_conjugator: conjugator,
    }
}

/// Innerness test on the rotation starting at syllable `r`. The outer `None`
/// means some intermediate word exceeded `cap`; the inner value is the
/// conjugator of `w`, if any.
fn compare_halves(w: &MappingClassWord, r: usize, cap: Option<usize>) -> Option<Option<Word>> {
    let prefix = MappingClassWord {
        syllables: w.syllables[..r].to_vec(),
    };
    let mut rotated = MappingClassWord {
        syllables: w.syllables[r..].to_vec(),
    };
    for &(i, e) in prefix.syllables() {
        rotated.push(i, e);
    }
    let (left, right) = split_half(&rotated);
    // w' = left · right is inner  ⇔  left(x) = g · right⁻¹(x) · g⁻¹ for all x
    let (a, b) = rayon::join(
        || image_table_capped(&left, cap),
        || image_table_capped(&right.inverse(), cap),
    );
    let (a, b) = (a?, b?);
    Some(freegroup::conjugator_between(&a, &b).map(|g| act_on_word(&prefix, &g)))
}

/// Floating-point homology entries, used only to rank cut points.
type Approx = [[f64; 4]; 4];

fn approx(m: &SymplecticMatrix) -> Approx {
    m.0.map(|row| row.map(|x| x as f64))
}

fn approx_mul(a: &Approx, b: &Approx) -> Approx {
    let mut out = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = (0..4).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

fn approx_size(a: &Approx) -> f64 {
    a.iter().flatten().fold(0.0, |m, x| m.max(x.abs()))
}

/// Syllable offsets of cyclic rotations ranked by the homology entries met
/// while evaluating their two halves; offset 0 is always included.
fn rotation_candidates(w: &MappingClassWord, count: usize) -> Vec<usize> {
    let n = w.syllables.len();
    if n < 4 {
        return vec![0];
    }
    let mats: Vec<Approx> = w
        .syllables
        .iter()
        .map(|&(i, e)| approx(&SymplecticMatrix::transvection(chain_class(i), e as i64)))
        .collect();
    let weights: Vec<usize> = w
        .syllables
        .iter()
        .map(|&(_, e)| e.unsigned_abs() as usize)
        .collect();
    let half = weights.iter().sum::<usize>() / 2;
    let id = approx(&SymplecticMatrix::identity());
    let mut scored: Vec<(f64, usize)> = (0..n)
        .map(|r| {
            let mut len = 0;
            let mut acc = 0;
            while acc < half {
                acc += weights[(r + len) % n];
                len += 1;
            }
            let mut cost: f64 = 0.0;
            // left half: evaluated from its right end, so suffixes
            let mut h = id;
            for k in (0..len).rev() {
                h = approx_mul(&mats[(r + k) % n], &h);
                cost = cost.max(approx_size(&h));
            }
            // inverse of the right half: inverses of prefixes, same entry sizes
            let mut h = id;
            for k in len..n {
                h = approx_mul(&h, &mats[(r + k) % n]);
                cost = cost.max(approx_size(&h));
            }
            (cost, r)
        })
        .collect();
    scored.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    let mut out = vec![0];
    for (_, r) in scored {
        if out.len() > count {
            break;
        }
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

/// Splits a word into two halves of (nearly) equal twist length.
fn split_half(w: &MappingClassWord) -> (MappingClassWord, MappingClassWord) {
    let target = w.twist_length() / 2;
    let mut left = MappingClassWord::empty();
    let mut right = MappingClassWord::empty();
    let mut seen = 0usize;
    for &(i, e) in &w.syllables {
        let n = e.unsigned_abs() as usize;
        if seen >= target {
            right.push(i, e);
        } else if seen + n <= target {
            left.push(i, e);
        } else {
            let take = (target - seen) as i32 * e.signum();
            left.push(i, take);
            right.push(i, e - take);
        }
        seen += n;
    }
    (left, right)
}

/// The curves every other curve is transported from.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum BaseCurve {
    C1,
    C2,
    C3,
    C4,
    C5,
    /// Separating curve bounding the torus that contains `c1` and `c2`.
    S0,
}

impl BaseCurve {
    pub const ALL: [BaseCurve; 6] = [
        BaseCurve::C1,
        BaseCurve::C2,
        BaseCurve::C3,
        BaseCurve::C4,
        BaseCurve::C5,
        BaseCurve::S0,
    ];

    pub fn chain(i: u8) -> Option<BaseCurve> {
        match i {
            1 => Some(BaseCurve::C1),
            2 => Some(BaseCurve::C2),
            3 => Some(BaseCurve::C3),
            4 => Some(BaseCurve::C4),
            5 => Some(BaseCurve::C5),
            _ => None,
        }
    }

    pub fn chain_index(self) -> Option<u8> {
        match self {
            BaseCurve::C1 => Some(1),
            BaseCurve::C2 => Some(2),
            BaseCurve::C3 => Some(3),
            BaseCurve::C4 => Some(4),
            BaseCurve::C5 => Some(5),
            BaseCurve::S0 => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BaseCurve::C1 => "C1",
            BaseCurve::C2 => "C2",
            BaseCurve::C3 => "C3",
            BaseCurve::C4 => "C4",
            BaseCurve::C5 => "C5",
            BaseCurve::S0 => "S0",
        }
    }

    /// Twist along the base curve: `g_i`, or `(g1 g2)^6` for `S0`.
    pub fn twist(self) -> MappingClassWord {
        match self.chain_index() {
            Some(i) => MappingClassWord::generator(i).unwrap(),
            None => MappingClassWord::from_generators(&[1, 2]).unwrap().pow(6),
        }
    }

    pub fn class(self) -> HomologyClass {
        match self.chain_index() {
            Some(i) => chain_class(i),
            None => HomologyClass::ZERO,
        }
    }
}

impl std::str::FromStr for BaseCurve {
    type Err = McgError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BaseCurve::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| McgError::UnknownBase(s.to_string()))
    }
}

impl Serialize for BaseCurve {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for BaseCurve {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The curve `transporter(base)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Curve {
    pub transporter: MappingClassWord,
    pub base: BaseCurve,
}

impl Curve {
    pub fn base(base: BaseCurve) -> Self {
        Curve {
            transporter: MappingClassWord::empty(),
            base,
        }
    }

    pub fn chain(i: u8) -> Self {
        Curve::base(BaseCurve::chain(i).expect("chain index in 1..=5"))
    }

    pub fn new(transporter: MappingClassWord, base: BaseCurve) -> Self {
        Curve { transporter, base }
    }

    pub fn is_separating(&self) -> bool {
        self.base == BaseCurve::S0
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.transporter.is_empty() {
            write!(f, "{}", self.base.name())
        } else {
            write!(f, "({})({})", self.transporter, self.base.name())
        }
    }
}

/// `t_c^e = w · t_base^e · w⁻¹`
pub fn expand_twist(c: &Curve, exponent: i64) -> Result<MappingClassWord, McgError> {
    if exponent == 0 {
        return Err(McgError::ZeroExponent);
    }
    Ok(c.base.twist().pow(exponent).conjugate_by(&c.transporter))
}

pub fn apply_to_curve(w: &MappingClassWord, c: &Curve) -> Curve {
    Curve {
        transporter: w.mul(&c.transporter),
        base: c.base,
    }
}

/// Isotopy test: two curves agree iff their twists agree.
pub fn curve_equal(c: &Curve, d: &Curve) -> bool {
    if c.is_separating() != d.is_separating() {
        return false;
    }
    if curve_class(c) != curve_class(d) && curve_class(c) != curve_class(d).negate() {
        return false;
    }
    let tc = expand_twist(c, 1).unwrap();
    let td = expand_twist(d, 1).unwrap();
    is_identity(&tc.mul(&td.inverse())).verdict == Verdict::Identity
}

/// `true` when the twists along `c` and `d` commute, i.e. the curves can be
/// made disjoint.
pub fn twists_commute(c: &Curve, d: &Curve) -> bool {
    if curve_class(c).intersection(&curve_class(d)) != 0 {
        return false;
    }
    let tc = expand_twist(c, 1).unwrap();
    let td = expand_twist(d, 1).unwrap();
    let commutator = tc.mul(&td).mul(&tc.inverse()).mul(&td.inverse());
    is_identity(&commutator).verdict == Verdict::Identity
}

/// Homology class (up to sign) of a curve; zero for separating curves.
pub fn curve_class(c: &Curve) -> HomologyClass {
    homology_action(&c.transporter).apply(&c.base.class())
}

pub fn is_separating(c: &Curve) -> bool {
    c.is_separating()
}

/// A word carrying `c_i` onto `c_j`, built from the adjacent steps
/// `g_k g_{k±1} (c_k) = c_{k±1}`.
pub fn standard_transporter(i: u8, j: u8) -> Result<MappingClassWord, McgError> {
    for k in [i, j] {
        if !(1..=GENERATORS).contains(&k) {
            return Err(McgError::BadGenerator(k as i64));
        }
    }
    let mut w = MappingClassWord::empty();
    let mut k = i;
    while k != j {
        let next = if j > k { k + 1 } else { k - 1 };
        let step = MappingClassWord::from_generators(&[k, next]).unwrap();
        w = step.mul(&w);
        k = next;
    }
    Ok(w)
}
