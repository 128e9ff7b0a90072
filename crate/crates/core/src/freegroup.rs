//! Reduced words and automorphisms of finite-rank free groups.
//!
//! Words are flat arrays of signed generator letters kept freely reduced at
//! all times. Automorphisms carry both their image table and the image table
//! of their inverse, so inverting never requires a search.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FreeGroupError {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("letter x{generator} is outside rank {rank}")]
    LetterOutOfRange { generator: u32, rank: usize },
    #[error("generator index must be at least 1")]
    ZeroGenerator,
    #[error("image table has {got} entries, expected {rank}")]
    ImageCount { got: usize, rank: usize },
    #[error("supplied inverse does not invert the map on x{0}")]
    NotInverse(usize),
}

/// A generator `x_i` or its inverse. Stored as `+i` / `-i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Letter(i32);

impl Letter {
    pub fn new(generator: u32, inverse: bool) -> Result<Self, FreeGroupError> {
        if generator == 0 {
            return Err(FreeGroupError::ZeroGenerator);
        }
        let g = generator as i32;
        Ok(Letter(if inverse { -g } else { g }))
    }

    /// Builds a letter from its signed form; `0` is rejected.
    pub fn from_signed(raw: i32) -> Result<Self, FreeGroupError> {
        if raw == 0 {
            Err(FreeGroupError::ZeroGenerator)
        } else {
            Ok(Letter(raw))
        }
    }

    #[inline]
    pub fn generator(self) -> u32 {
        self.0.unsigned_abs()
    }

    #[inline]
    pub fn is_inverse(self) -> bool {
        self.0 < 0
    }

    #[inline]
    pub fn inverse(self) -> Self {
        Letter(-self.0)
    }

    #[inline]
    pub fn signed(self) -> i32 {
        self.0
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_inverse() {
            write!(f, "x{}^-1", self.generator())
        } else {
            write!(f, "x{}", self.generator())
        }
    }
}

/// A freely reduced word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

/// Freely reduces an arbitrary letter sequence with a single stack pass.
pub fn reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
    let mut out: Vec<Letter> = Vec::new();
    for l in letters {
        push_reduced(&mut out, l);
    }
    Word { letters: out }
}

#[inline]
fn push_reduced(buf: &mut Vec<Letter>, l: Letter) {
    if buf.last() == Some(&l.inverse()) {
        buf.pop();
    } else {
        buf.push(l);
    }
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn generator(i: u32) -> Self {
        Word {
            letters: vec![Letter(i as i32)],
        }
    }

    /// Reduced word from signed letters, e.g. `[1, -2]` is `x1 x2^-1`.
    pub fn from_signed(raw: &[i32]) -> Result<Self, FreeGroupError> {
        let letters = raw
            .iter()
            .map(|&r| Letter::from_signed(r))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(reduce(letters))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn to_signed(&self) -> Vec<i32> {
        self.letters.iter().map(|l| l.signed()).collect()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index that occurs, or 0 for the empty word.
    pub fn max_generator(&self) -> u32 {
        self.letters
            .iter()
            .map(|l| l.generator())
            .max()
            .unwrap_or(0)
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut out = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut out, l);
        }
        Word { letters: out }
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::empty();
        for _ in 0..k.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// `g · self · g⁻¹`
    pub fn conjugate_by(&self, g: &Word) -> Word {
        g.mul(self).mul(&g.inverse())
    }

    /// Splits `self = conjugator · core · conjugator⁻¹` with `core` cyclically
    /// reduced.
    pub fn cyclically_reduce(&self) -> (Word, Word) {
        let n = self.letters.len();
        let mut k = 0;
        while 2 * k + 1 < n && self.letters[k] == self.letters[n - 1 - k].inverse() {
            k += 1;
        }
        (
            Word {
                letters: self.letters[k..n - k].to_vec(),
            },
            Word {
                letters: self.letters[..k].to_vec(),
            },
        )
    }

    /// Shortest `r` with `self = r^m`, for a cyclically reduced word.
    fn primitive_root_of_core(&self) -> Word {
        let n = self.letters.len();
        for p in 1..=n {
            if n.is_multiple_of(p) && (p..n).all(|i| self.letters[i] == self.letters[i - p]) {
                return Word {
                    letters: self.letters[..p].to_vec(),
                };
            }
        }
        self.clone()
    }

    /// Generator of the (cyclic) centralizer of a nontrivial word.
    pub fn centralizer_generator(&self) -> Word {
        let (core, conj) = self.cyclically_reduce();
        core.primitive_root_of_core().conjugate_by(&conj)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        reduce(iter)
    }
}

/// Returns `g` with `u = g v g⁻¹` if `u` and `v` are conjugate.
pub fn is_conjugate(u: &Word, v: &Word) -> Option<Word> {
    let (cu, a) = u.cyclically_reduce();
    let (cv, b) = v.cyclically_reduce();
    if cu.len() != cv.len() {
        return None;
    }
    if cu.is_empty() {
        return Some(a.mul(&b.inverse()));
    }
    // cu = p q and cv = q p means cu = p cv p⁻¹.
    let n = cu.len();
    let k = rotation_offset(&cu.letters, &cv.letters)?;
    let p = Word {
        letters: cu.letters[..(n - k) % n].to_vec(),
    };
    Some(a.mul(&p).mul(&b.inverse()))
}

/// Least `k` with `v[k..] ++ v[..k] == u`, by Knuth-Morris-Pratt search for
/// `u` in `v v`.
fn rotation_offset(u: &[Letter], v: &[Letter]) -> Option<usize> {
    let n = u.len();
    if n != v.len() {
        return None;
    }
    if n == 0 {
        return Some(0);
    }
    let mut fail = vec![0usize; n];
    let mut j = 0;
    for i in 1..n {
        while j > 0 && u[i] != u[j] {
            j = fail[j - 1];
        }
        if u[i] == u[j] {
            j += 1;
        }
        fail[i] = j;
    }
    let mut j = 0;
    for i in 0..2 * n - 1 {
        let c = v[i % n];
        while j > 0 && c != u[j] {
            j = fail[j - 1];
        }
        if c == u[j] {
            j += 1;
        }
        if j == n {
            return Some(i + 1 - n);
        }
    }
    None
}

/// Signed number of leading copies of `r` (or of `r⁻¹`) in `x`.
fn leading_power(x: &Word, r: &Word) -> i64 {
    let count = |p: &[Letter]| x.letters.chunks(p.len()).take_while(|c| *c == p).count() as i64;
    if r.is_empty() {
        return 0;
    }
    let forward = count(&r.letters);
    if forward > 0 {
        forward
    } else {
        -count(&r.inverse().letters)
    }
}

/// An automorphism of the free group of the given rank, stored together with
/// its inverse.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FreeAutomorphism {
    images: Vec<Word>,
    inverse_images: Vec<Word>,
}

impl FreeAutomorphism {
    pub fn identity(rank: usize) -> Self {
        let images: Vec<Word> = (1..=rank as u32).map(Word::generator).collect();
        FreeAutomorphism {
            inverse_images: images.clone(),
            images,
        }
    }

    /// Conjugation `x ↦ g x g⁻¹`.
    pub fn inner(rank: usize, g: &Word) -> Result<Self, FreeGroupError> {
        check_word(g, rank)?;
        let gi = g.inverse();
        Ok(FreeAutomorphism {
            images: (1..=rank as u32)
                .map(|i| Word::generator(i).conjugate_by(g))
                .collect(),
            inverse_images: (1..=rank as u32)
                .map(|i| Word::generator(i).conjugate_by(&gi))
                .collect(),
        })
    }

    /// Generator permutation `x_i ↦ x_{perm[i-1]}` (1-based targets).
    pub fn permutation(perm: &[u32]) -> Result<Self, FreeGroupError> {
        let rank = perm.len();
        let mut inverse = vec![0u32; rank];
        for (i, &t) in perm.iter().enumerate() {
            if t == 0 || t as usize > rank || inverse[t as usize - 1] != 0 {
                return Err(FreeGroupError::LetterOutOfRange { generator: t, rank });
            }
            inverse[t as usize - 1] = i as u32 + 1;
        }
        Ok(FreeAutomorphism {
            images: perm.iter().map(|&t| Word::generator(t)).collect(),
            inverse_images: inverse.iter().map(|&t| Word::generator(t)).collect(),
        })
    }

    /// Builds an automorphism from an image table and a claimed inverse table.
    /// The claim is checked on every generator in both directions.
    pub fn from_images(
        images: Vec<Word>,
        inverse_images: Vec<Word>,
    ) -> Result<Self, FreeGroupError> {
        let rank = images.len();
        if inverse_images.len() != rank {
            return Err(FreeGroupError::ImageCount {
                got: inverse_images.len(),
                rank,
            });
        }
        for w in images.iter().chain(inverse_images.iter()) {
            check_word(w, rank)?;
        }
        let f = FreeAutomorphism {
            images,
            inverse_images,
        };
        for i in 1..=rank as u32 {
            let x = Word::generator(i);
            if f.eval(&f.eval_inverse(&x)) != x || f.eval_inverse(&f.eval(&x)) != x {
                return Err(FreeGroupError::NotInverse(i as usize));
            }
        }
        Ok(f)
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    /// Image of generator `x_i` (1-based).
    pub fn image(&self, i: usize) -> &Word {
        &self.images[i - 1]
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn inverse(&self) -> FreeAutomorphism {
        FreeAutomorphism {
            images: self.inverse_images.clone(),
            inverse_images: self.images.clone(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, w)| w.letters.len() == 1 && w.letters[0] == Letter(i as i32 + 1))
    }

    /// Sum of image lengths; a cheap size measure.
    pub fn total_length(&self) -> usize {
        self.images.iter().map(Word::len).sum()
    }

    fn eval(&self, w: &Word) -> Word {
        substitute(&self.images, w)
    }

    fn eval_inverse(&self, w: &Word) -> Word {
        substitute(&self.inverse_images, w)
    }

    pub fn apply(&self, w: &Word) -> Result<Word, FreeGroupError> {
        check_word(w, self.rank())?;
        Ok(self.eval(w))
    }

    /// `self ∘ other`, i.e. `x ↦ self(other(x))`.
    pub fn compose(&self, other: &FreeAutomorphism) -> Result<FreeAutomorphism, FreeGroupError> {
        if self.rank() != other.rank() {
            return Err(FreeGroupError::RankMismatch {
                left: self.rank(),
                right: other.rank(),
            });
        }
        Ok(FreeAutomorphism {
            images: other.images.iter().map(|w| self.eval(w)).collect(),
            inverse_images: self
                .inverse_images
                .iter()
                .map(|w| other.eval_inverse(w))
                .collect(),
        })
    }

    /// Returns `g` with `self(x_i) = g x_i g⁻¹` for every generator, if the
    /// automorphism is inner.
    pub fn is_inner(&self) -> Option<Word> {
        conjugator_between(
            &self.images,
            &FreeAutomorphism::identity(self.rank()).images,
        )
    }
}

fn check_word(w: &Word, rank: usize) -> Result<(), FreeGroupError> {
    match w.letters.iter().find(|l| l.generator() as usize > rank) {
        Some(l) => Err(FreeGroupError::LetterOutOfRange {
            generator: l.generator(),
            rank,
        }),
        None => Ok(()),
    }
}

/// Letter-by-letter substitution of `w` through an image table.
pub(crate) fn substitute(images: &[Word], w: &Word) -> Word {
    let mut out: Vec<Letter> = Vec::with_capacity(w.len());
    for &l in &w.letters {
        let img = &images[l.generator() as usize - 1];
        if l.is_inverse() {
            for &m in img.letters.iter().rev() {
                push_reduced(&mut out, m.inverse());
            }
        } else {
            for &m in &img.letters {
                push_reduced(&mut out, m);
            }
        }
    }
    Word { letters: out }
}

/// Finds a single `g` with `target[i] = g · source[i] · g⁻¹` for all `i`.
///
/// `source` must be the image table of an automorphism (in particular its
/// first two entries do not commute when the rank is at least two). The
/// candidate set for `g` is `h · ⟨r⟩` where `h` conjugates `source[0]` onto
/// `target[0]` and `r` generates the centralizer of `source[0]`; the exponent
/// is found by scanning a window bounded by the word lengths involved.
pub fn conjugator_between(target: &[Word], source: &[Word]) -> Option<Word> {
    assert_eq!(target.len(), source.len());
    if target.is_empty() {
        return Some(Word::empty());
    }
    let h = is_conjugate(&target[0], &source[0])?;
    let check = |g: &Word| {
        target
            .iter()
            .zip(source)
            .all(|(t, s)| &s.conjugate_by(g) == t)
    };
    if target.len() == 1 {
        return check(&h).then_some(h);
    }
    let r = source[0].centralizer_generator();
    // r^k · source[1] · r^-k must equal w := h⁻¹ target[1] h; with
    // r = c r0 c⁻¹ this reads r0^k s r0^-k = t for s, t conjugated by c⁻¹.
    let w = target[1].conjugate_by(&h.inverse());
    let (r0, c) = r.cyclically_reduce();
    let s = source[1].conjugate_by(&c.inverse());
    let t = w.conjugate_by(&c.inverse());
    let matches = |k: i64| s.conjugate_by(&r0.pow(k)) == t;
    // The leading powers of r0 differ by about k; try near that first.
    let guess = leading_power(&t, &r0) - leading_power(&s, &r0);
    let near = (guess - 3..=guess + 3).chain(-3..=3);
    let k0 = match near.clone().find(|&k| matches(k)) {
        Some(k) => k,
        None => {
            let bound = (w.len() + source[1].len() + r.len() + 2) as i64;
            (-bound..=bound).find(|&k| !near.clone().any(|j| j == k) && matches(k))?
        }
    };
    let g = h.mul(&r.pow(k0));
    check(&g).then_some(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(raw: &[i32]) -> Word {
        Word::from_signed(raw).unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(w(&[]), Word::empty());
        assert_eq!(w(&[1, -1]), Word::empty());
        assert_eq!(w(&[1, 2, -2, 2, -1, 1]).to_signed(), vec![1, 2]);
        assert!(Word::from_signed(&[1, 0]).is_err());
    }

    #[test]
    fn cyclic_reduction_examples() {
        assert_eq!(w(&[1, 2, -1]).cyclically_reduce(), (w(&[2]), w(&[1])));
        assert_eq!(w(&[2]).cyclically_reduce(), (w(&[2]), Word::empty()));
        assert_eq!(
            w(&[1, 2, 3, -2, -1]).cyclically_reduce(),
            (w(&[3]), w(&[1, 2]))
        );
        // x1 x1^-1 is never stored, so a two-letter inverse pair cannot occur.
        assert_eq!(w(&[1, -1, 2]).cyclically_reduce(), (w(&[2]), Word::empty()));
    }

    #[test]
    fn conjugacy_examples() {
        assert_eq!(is_conjugate(&w(&[1]), &w(&[1])), Some(Word::empty()));
        let u = w(&[1, 2]);
        let v = w(&[2, 1]);
        let g = is_conjugate(&u, &v).unwrap();
        assert_eq!(v.conjugate_by(&g), u);
        assert_eq!(g, w(&[1]));
        assert_eq!(is_conjugate(&w(&[1]), &w(&[2])), None);
        assert_eq!(is_conjugate(&w(&[1, 1]), &w(&[1])), None);
    }

    #[test]
    fn centralizer_of_power() {
        let x = w(&[3, 1, 2, 1, 2, -3]);
        assert_eq!(x.centralizer_generator(), w(&[3, 1, 2, -3]));
    }

    #[test]
    fn compose_inverse_pair_is_identity() {
        let f = FreeAutomorphism::inner(3, &w(&[1])).unwrap();
        let g = FreeAutomorphism::inner(3, &w(&[-1])).unwrap();
        assert!(f.compose(&g).unwrap().is_identity());
        let id = FreeAutomorphism::identity(3);
        assert!(id.compose(&id).unwrap().is_identity());
        assert_eq!(
            f.compose(&FreeAutomorphism::identity(2)),
            Err(FreeGroupError::RankMismatch { left: 3, right: 2 })
        );
    }

    #[test]
    fn apply_examples() {
        let id = FreeAutomorphism::identity(3);
        assert_eq!(id.apply(&w(&[1, -3, 2])).unwrap(), w(&[1, -3, 2]));
        let g = w(&[2, 3]);
        let c = FreeAutomorphism::inner(3, &g).unwrap();
        let x = w(&[1, 3]);
        assert_eq!(c.apply(&x).unwrap(), x.conjugate_by(&g));
        assert!(id.apply(&w(&[4])).is_err());
    }

    #[test]
    fn is_inner_examples() {
        assert_eq!(
            FreeAutomorphism::identity(3).is_inner(),
            Some(Word::empty())
        );
        let g = w(&[1, 2]);
        let f = FreeAutomorphism::inner(3, &g).unwrap();
        assert_eq!(f.is_inner(), Some(g));
        let swap = FreeAutomorphism::permutation(&[2, 1]).unwrap();
        assert_eq!(swap.is_inner(), None);
    }

    #[test]
    fn is_inner_with_centralizer_shift() {
        // g ends in a power of x1, so the first-generator test alone cannot
        // see the exponent.
        let g = w(&[2, 3, 1, 1, 1]);
        let f = FreeAutomorphism::inner(3, &g).unwrap();
        let found = f.is_inner().unwrap();
        assert_eq!(found, g);
    }

    #[test]
    fn from_images_rejects_non_inverse() {
        let images = vec![w(&[1, 2]), w(&[2])];
        let bad = vec![w(&[1]), w(&[2])];
        assert_eq!(
            FreeAutomorphism::from_images(images.clone(), bad),
            Err(FreeGroupError::NotInverse(1))
        );
        let good = vec![w(&[1, -2]), w(&[2])];
        assert!(FreeAutomorphism::from_images(images, good).is_ok());
    }
}
