#![allow(dead_code)]

use g2lf::artifact;
use g2lf::factorization::{self, PositiveFactorization};
use g2lf::mcg::{BaseCurve, Curve, MappingClassWord};
use rand::Rng;

pub fn random_word<R: Rng>(rng: &mut R, max_syllables: usize) -> MappingClassWord {
    let len = rng.gen_range(0..=max_syllables);
    let raw: Vec<(i64, i64)> = (0..len)
        .map(|_| {
            let e = [-2, -1, 1, 2][rng.gen_range(0..4)];
            (rng.gen_range(1..=5), e)
        })
        .collect();
    MappingClassWord::from_syllables(&raw).unwrap()
}

pub fn gens(g: &[u8]) -> MappingClassWord {
    MappingClassWord::from_generators(g).unwrap()
}

pub fn chain_letters(g: &[u8]) -> PositiveFactorization {
    PositiveFactorization::new(g.iter().map(|&i| Curve::chain(i)).collect())
}

pub fn repeat(g: &[u8], k: usize) -> Vec<u8> {
    g.iter().copied().cycle().take(g.len() * k).collect()
}

/// Positive relation words of the genus-2 group, each a verified factorization.
pub fn relation_words() -> Vec<PositiveFactorization> {
    vec![
        chain_letters(&repeat(&[1, 2, 3, 4, 5], 6)),
        chain_letters(&repeat(&[1, 2, 3, 4, 5, 5, 4, 3, 2, 1], 2)),
        chain_letters(&repeat(&[1, 2, 3, 4], 10)),
        artifact::bundled_seed().factorization(),
    ]
}

pub fn base_curve<R: Rng>(rng: &mut R) -> BaseCurve {
    BaseCurve::ALL[rng.gen_range(0..BaseCurve::ALL.len())]
}

pub fn random_curve<R: Rng>(rng: &mut R, max_syllables: usize) -> Curve {
    Curve::new(random_word(rng, max_syllables), base_curve(rng))
}

/// Naive reducer: rescan from the start after every cancellation.
pub fn naive_reduce(raw: &[i32]) -> Vec<i32> {
    let mut v = raw.to_vec();
    loop {
        let hit = (0..v.len().saturating_sub(1)).find(|&i| v[i] == -v[i + 1]);
        match hit {
            Some(i) => {
                v.drain(i..i + 2);
            }
            None => return v,
        }
    }
}

/// Independent homology evaluator: chain classes and the intersection form
/// written out by hand, each twist a transvection applied right to left.
pub fn transvection_oracle(w: &MappingClassWord) -> [[i64; 4]; 4] {
    const CLASSES: [[i64; 4]; 5] = [
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [1, 0, 1, 0],
        [0, 0, 0, 1],
        [0, 0, 1, 0],
    ];
    let form = |x: &[i64; 4], y: &[i64; 4]| x[0] * y[1] - x[1] * y[0] + x[2] * y[3] - x[3] * y[2];
    let mut columns = [[0i64; 4]; 4];
    for (j, col) in columns.iter_mut().enumerate() {
        let mut v = [0i64; 4];
        v[j] = 1;
        for &(g, e) in w.syllables().iter().rev() {
            let c = CLASSES[g as usize - 1];
            let k = form(&v, &c) * e as i64;
            for t in 0..4 {
                v[t] += k * c[t];
            }
        }
        *col = v;
    }
    let mut m = [[0i64; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            m[i][j] = columns[j][i];
        }
    }
    m
}

/// Lemma-1 style admissibility written independently of the library.
pub fn oracle_admissible(n: u64, s: u64) -> bool {
    let t = n + 2 * s;
    t.is_multiple_of(10) && t >= 10 && 2 * n as i64 - 5 >= s as i64 && !(t == 10 && s < 2)
}

/// Every unordered split into two admissible types.
pub fn brute_force_splits(n: u64, s: u64) -> Vec<((u64, u64), (u64, u64))> {
    let mut out = vec![];
    for n1 in 0..=n {
        for s1 in 0..=s {
            let (a, b) = ((n1, s1), (n - n1, s - s1));
            if a <= b && oracle_admissible(a.0, a.1) && oracle_admissible(b.0, b.1) {
                out.push((a, b));
            }
        }
    }
    out
}

pub fn sigma(pf: &PositiveFactorization) -> i64 {
    let t = factorization::type_of(pf);
    g2lf::analysis::signature(t.n, t.s).unwrap()
}
