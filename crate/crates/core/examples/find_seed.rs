//! Meet-in-the-middle search for a positive relation C1 N2 N3 N4 S1 S2 S3 = 1
//! with nonseparating classes (e, e+f, f, e-f) and three separating letters.
//! Group elements are hashed through their permutation action on Hurwitz
//! tuples of small symmetric groups; hits are confirmed exactly.

use g2lf::freegroup::Word;
use g2lf::mcg::*;
use std::collections::HashMap;

type Perm = Vec<u8>;

fn perms(k: usize) -> Vec<Perm> {
    let mut out = vec![];
    let mut p: Perm = (0..k as u8).collect();
    fn rec(i: usize, p: &mut Perm, out: &mut Vec<Perm>) {
        if i == p.len() {
            out.push(p.clone());
            return;
        }
        for j in i..p.len() {
            p.swap(i, j);
            rec(i + 1, p, out);
            p.swap(i, j);
        }
    }
    rec(0, &mut p, &mut out);
    out.sort();
    out
}

fn mul(a: &Perm, b: &Perm) -> Perm {
    // apply b then a
    b.iter().map(|&x| a[x as usize]).collect()
}

fn inv(a: &Perm) -> Perm {
    let mut r = vec![0u8; a.len()];
    for (i, &x) in a.iter().enumerate() {
        r[x as usize] = i as u8;
    }
    r
}

struct Space {
    points: Vec<[u16; 5]>,
    gens: Vec<[Vec<u32>; 2]>,
}

fn build_space(k: usize, in_class: impl Fn(&Perm) -> bool) -> Space {
    let all = perms(k);
    let index: HashMap<Perm, u16> = all
        .iter()
        .enumerate()
        .map(|(i, p)| (p.clone(), i as u16))
        .collect();
    let class: Vec<u16> = (0..all.len() as u16)
        .filter(|&i| in_class(&all[i as usize]))
        .collect();
    let id: Perm = (0..k as u8).collect();
    let canon = |t: &[u16; 5]| -> [u16; 5] {
        let mut best = *t;
        for h in &all {
            let hi = inv(h);
            let c: [u16; 5] =
                std::array::from_fn(|j| index[&mul(&mul(h, &all[t[j] as usize]), &hi)]);
            if c < best {
                best = c;
            }
        }
        best
    };
    let mut pts: Vec<[u16; 5]> = vec![];
    let n = class.len();
    for code in 0..n.pow(5) {
        let mut c = code;
        let t: [u16; 5] = std::array::from_fn(|_| {
            let v = class[c % n];
            c /= n;
            v
        });
        let mut prod = id.clone();
        for j in 0..5 {
            prod = mul(&prod, &all[t[j] as usize]);
        }
        if !in_class(&inv(&prod)) {
            continue;
        }
        if canon(&t) == t {
            pts.push(t);
        }
    }
    pts.sort();
    let lookup: HashMap<[u16; 5], u32> = pts
        .iter()
        .enumerate()
        .map(|(i, t)| (*t, i as u32))
        .collect();
    let eval = |w: &Word, t: &[u16; 5]| -> Perm {
        let mut r = id.clone();
        for l in w.letters() {
            let g = &all[t[l.generator() as usize - 1] as usize];
            r = mul(&r, &if l.is_inverse() { inv(g) } else { g.clone() });
        }
        r
    };
    let mut gens = vec![];
    for i in 1..=5u8 {
        let mut pair: [Vec<u32>; 2] = [vec![], vec![]];
        for (s, e) in [1i64, -1].into_iter().enumerate() {
            let w = MappingClassWord::from_syllables(&[(i as i64, e)]).unwrap();
            let imgs: Vec<Word> = (1..=5)
                .map(|j| act_on_word(&w, &Word::generator(j)))
                .collect();
            pair[s] = pts
                .iter()
                .map(|t| {
                    let nt: [u16; 5] = std::array::from_fn(|j| index[&eval(&imgs[j], t)]);
                    lookup[&canon(&nt)]
                })
                .collect();
        }
        gens.push(pair);
    }
    Space { points: pts, gens }
}

/// Concatenated permutation representation.
struct Rep {
    offsets: Vec<usize>,
    gens: Vec<[Vec<u32>; 2]>,
    size: usize,
}

impl Rep {
    fn new(spaces: Vec<Space>) -> Rep {
        let mut offsets = vec![];
        let mut size = 0;
        for s in &spaces {
            offsets.push(size);
            size += s.points.len();
        }
        let mut gens: Vec<[Vec<u32>; 2]> = (0..5).map(|_| [vec![0; size], vec![0; size]]).collect();
        for (s, off) in spaces.iter().zip(&offsets) {
            for (dst, src) in gens.iter_mut().zip(&s.gens) {
                for (d, e) in dst.iter_mut().zip(src) {
                    for (i, &v) in e.iter().enumerate() {
                        d[off + i] = v + *off as u32;
                    }
                }
            }
        }
        Rep {
            offsets,
            gens,
            size,
        }
    }

    /// Point map of a word: syllables are applied left to right.
    fn word(&self, w: &MappingClassWord) -> Vec<u32> {
        let mut m: Vec<u32> = (0..self.size as u32).collect();
        for &(g, e) in w.syllables() {
            let t = &self.gens[g as usize - 1][if e > 0 { 0 } else { 1 }];
            for _ in 0..e.unsigned_abs() {
                for x in m.iter_mut() {
                    *x = t[*x as usize];
                }
            }
        }
        m
    }
}

fn invp(m: &[u32]) -> Vec<u32> {
    let mut r = vec![0; m.len()];
    for (i, &x) in m.iter().enumerate() {
        r[x as usize] = i as u32;
    }
    r
}

fn norm(c: HomologyClass) -> [i64; 4] {
    let v = c.0;
    let s = v.iter().find(|&&x| x != 0).map(|x| x.signum()).unwrap_or(1);
    v.map(|x| x * s)
}

struct Pooled {
    curve: Curve,
    twist: Vec<u32>,
}

fn main() {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .map(|a| a.parse().unwrap())
        .collect();
    let max_nodes = *args.first().unwrap_or(&20000);
    let per_class = *args.get(1).unwrap_or(&20);
    let sep_cap = *args.get(2).unwrap_or(&800);
    let is_tr = |p: &Perm| p.iter().enumerate().filter(|(i, &x)| *i as u8 != x).count() == 2;
    let spaces = vec![
        build_space(3, is_tr),
        build_space(4, is_tr),
        build_space(5, is_tr),
    ];
    for s in &spaces {
        eprintln!("space of size {}", s.points.len());
    }
    let rep = Rep::new(spaces);
    let _ = &rep.offsets;
    // sanity: chain relation
    let rel = MappingClassWord::from_generators(&[1, 2, 3, 4, 5])
        .unwrap()
        .pow(6);
    assert!(rep
        .word(&rel)
        .iter()
        .enumerate()
        .all(|(i, &x)| i as u32 == x));

    let e = [1, 0, 0, 0];
    let targets = [
        norm(HomologyClass([1, 3, 1, 0])),
        norm(HomologyClass([0, 3, 1, 0])),
        norm(HomologyClass([1, -3, -1, 0])),
    ];
    let sample: Vec<usize> = (0..rep.size).step_by((rep.size / 48).max(1)).collect();
    let _ = e;

    // curve BFS
    let mut seen: std::collections::HashSet<u64> = Default::default();
    let mut pools: [Vec<Pooled>; 3] = [vec![], vec![], vec![]];
    let mut seps: Vec<Pooled> = vec![];
    let mut frontier: Vec<(MappingClassWord, BaseCurve, Vec<u32>)> = vec![];
    for b in [BaseCurve::C1, BaseCurve::C3, BaseCurve::S0] {
        frontier.push((MappingClassWord::empty(), b, (0..rep.size as u32).collect()));
    }
    let base_maps: HashMap<BaseCurve, Vec<u32>> = BaseCurve::ALL
        .iter()
        .map(|&b| (b, rep.word(&b.twist())))
        .collect();
    let hash_of = |v: &[u32]| {
        use std::hash::{Hash, Hasher};
        let mut st = std::collections::hash_map::DefaultHasher::new();
        v.hash(&mut st);
        st.finish()
    };
    let twist_of = |mt: &[u32], b: BaseCurve| -> Vec<u32> {
        // point maps: T first, then the base twist, then T^{-1}
        let mti = invp(mt);
        let bm = &base_maps[&b];
        (0..rep.size)
            .map(|x| mti[bm[mt[x] as usize] as usize])
            .collect()
    };
    let mut nodes = 0;
    for (_, b, mt) in &frontier {
        seen.insert(hash_of(&twist_of(mt, *b)));
    }
    while !frontier.is_empty() && nodes < max_nodes {
        let mut next = vec![];
        for (t, b, mt) in frontier {
            let tw = twist_of(&mt, b);
            nodes += 1;
            let c = Curve::new(t.clone(), b);
            if b == BaseCurve::S0 {
                if seps.len() < sep_cap {
                    seps.push(Pooled {
                        curve: c.clone(),
                        twist: tw,
                    });
                }
            } else {
                let cls = norm(curve_class(&c));
                for (k, tg) in targets.iter().enumerate() {
                    if cls == *tg && pools[k].len() < per_class {
                        pools[k].push(Pooled {
                            curve: c.clone(),
                            twist: tw.clone(),
                        });
                    }
                }
            }
            if nodes + next.len() >= max_nodes {
                continue;
            }
            for g in 1..=5u8 {
                for ex in [1i64, -1] {
                    let gm = &rep.gens[g as usize - 1][if ex > 0 { 0 } else { 1 }];
                    // point map of g·T: apply g first, then T
                    let nm: Vec<u32> = (0..rep.size).map(|x| mt[gm[x] as usize]).collect();
                    if !seen.insert(hash_of(&twist_of(&nm, b))) {
                        continue;
                    }
                    let gw = MappingClassWord::from_syllables(&[(g as i64, ex)]).unwrap();
                    next.push((gw.mul(&t), b, nm));
                }
            }
        }
        frontier = next;
    }
    eprintln!(
        "nodes {nodes}, pools {} {} {}, seps {}",
        pools[0].len(),
        pools[1].len(),
        pools[2].len(),
        seps.len()
    );

    let c1 = Pooled {
        curve: Curve::chain(1),
        twist: rep.word(&BaseCurve::C1.twist()),
    };
    let [pa, pb, pc] = pools;
    let orders: [[&Vec<Pooled>; 3]; 2] = [[&pa, &pb, &pc], [&pc, &pb, &pa]];
    let c1v = vec![c1];
    let mut hits = 0;
    for (oi, order) in orders.iter().enumerate() {
        for mask in 0u32..64 {
            if mask.count_ones() != 3 {
                continue;
            }
            // positions 1..6 after C1: bit set means separating
            let mut letters: Vec<&Vec<Pooled>> = vec![&c1v];
            let mut ni = 0;
            for pos in 0..6 {
                if mask >> pos & 1 == 1 {
                    letters.push(&seps);
                } else {
                    letters.push(order[ni]);
                    ni += 1;
                }
            }
            // choose split minimizing the larger side
            let sizes: Vec<f64> = letters.iter().map(|p| p.len() as f64).collect();
            let split = (1..7)
                .min_by(|&a, &b| {
                    let ca = sizes[..a]
                        .iter()
                        .product::<f64>()
                        .max(sizes[a..].iter().product::<f64>());
                    let cb = sizes[..b]
                        .iter()
                        .product::<f64>()
                        .max(sizes[b..].iter().product::<f64>());
                    ca.partial_cmp(&cb).unwrap()
                })
                .unwrap();
            let lsize: f64 = sizes[..split].iter().product();
            let rsize: f64 = sizes[split..].iter().product();
            if rsize > 2e7 || lsize > 2e8 {
                eprintln!("skip order {oi} mask {mask:06b}: {lsize} x {rsize}");
                continue;
            }
            // right side: key = R_first^{-1}[ ... R_last^{-1}[w] ]
            let mut table: HashMap<u64, Vec<Vec<u32>>> = HashMap::new();
            let right = &letters[split..];
            let rinv: Vec<Vec<Vec<u32>>> = right
                .iter()
                .map(|p| p.iter().map(|c| invp(&c.twist)).collect())
                .collect();
            let mut stack: Vec<(Vec<u32>, Vec<u32>)> =
                vec![(sample.iter().map(|&w| w as u32).collect(), vec![])];
            while let Some((vals, idx)) = stack.pop() {
                let depth = idx.len();
                if depth == right.len() {
                    table.entry(hash_of(&vals)).or_default().push(idx);
                    continue;
                }
                // innermost inverse is the last letter
                let li = right.len() - 1 - depth;
                for (j, m) in rinv[li].iter().enumerate() {
                    let nv: Vec<u32> = vals.iter().map(|&x| m[x as usize]).collect();
                    let mut ni = idx.clone();
                    ni.push(j as u32);
                    stack.push((nv, ni));
                }
            }
            let left = &letters[..split];
            let mut stack: Vec<(Vec<u32>, Vec<u32>)> =
                vec![(sample.iter().map(|&w| w as u32).collect(), vec![])];
            while let Some((vals, idx)) = stack.pop() {
                let depth = idx.len();
                if depth == left.len() {
                    if let Some(list) = table.get(&hash_of(&vals)) {
                        for ridx in list {
                            let mut chosen: Vec<Curve> = idx
                                .iter()
                                .enumerate()
                                .map(|(k, &j)| left[k][j as usize].curve.clone())
                                .collect();
                            // ridx was built from the last letter inward
                            for (d, &_j) in ridx.iter().enumerate() {
                                let li = right.len() - 1 - d;
                                let _ = li;
                            }
                            let mut rc: Vec<Curve> = vec![Curve::chain(1); right.len()];
                            for (d, &j) in ridx.iter().enumerate() {
                                let li = right.len() - 1 - d;
                                rc[li] = right[li][j as usize].curve.clone();
                            }
                            chosen.extend(rc);
                            let w = chosen.iter().fold(MappingClassWord::empty(), |acc, c| {
                                acc.mul(&expand_twist(c, 1).unwrap())
                            });
                            let v = is_identity(&w).verdict;
                            println!(
                                "candidate {:?}: {}",
                                v,
                                serde_json::to_string(&chosen).unwrap()
                            );
                            if v == Verdict::Identity {
                                hits += 1;
                                if hits >= 3 {
                                    return;
                                }
                            }
                        }
                    }
                    continue;
                }
                for (j, c) in left[depth].iter().enumerate() {
                    let nv: Vec<u32> = vals.iter().map(|&x| c.twist[x as usize]).collect();
                    let mut ni = idx.clone();
                    ni.push(j as u32);
                    stack.push((nv, ni));
                }
            }
            eprintln!("order {oi} mask {mask:06b} done ({lsize} x {rsize})");
        }
    }
    eprintln!("done, hits {hits}");
}
