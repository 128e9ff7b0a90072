//! Searches short transporter words for the third interior curve of the
//! genus-2 lantern with boundary (C1, C1, C5, C5), given x = C3 and y = S0.

use g2lf::mcg::*;

fn main() {
    let max_len: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(5);
    let x = Curve::chain(3);
    let y = Curve::base(BaseCurve::S0);
    let boundary = MappingClassWord::from_syllables(&[(1, 2), (5, 2)]).unwrap();
    let tx = expand_twist(&x, 1).unwrap();
    let ty = expand_twist(&y, 1).unwrap();
    for (label, rest) in [("x y z", tx.mul(&ty)), ("y x z", ty.mul(&tx))] {
        // t_z = rest⁻¹ · t1² t5²
        let tz = rest.inverse().mul(&boundary);
        let m = homology_action(&tz);
        println!("order {label}: target homology {:?}", m.0);
        let mut frontier = vec![MappingClassWord::empty()];
        let mut found = false;
        for len in 0..=max_len {
            for w in &frontier {
                for b in 1..=5u8 {
                    let c = Curve::new(w.clone(), BaseCurve::chain(b).unwrap());
                    let cls = curve_class(&c);
                    if homology_action(&expand_twist(&c, 1).unwrap()) != m {
                        continue;
                    }
                    let _ = cls;
                    let t = expand_twist(&c, 1).unwrap();
                    if is_identity(&t.mul(&tz.inverse())).verdict == Verdict::Identity {
                        println!(
                            "  z = {c}  (len {len})  json {}",
                            serde_json::to_string(&c).unwrap()
                        );
                        found = true;
                    }
                }
            }
            if found {
                break;
            }
            let mut next = Vec::new();
            for w in &frontier {
                for g in 1..=5u8 {
                    for e in [1i64, -1] {
                        if let Some(&(last, le)) = w.syllables().last() {
                            if last == g && (le as i64).signum() != e {
                                continue;
                            }
                        }
                        next.push(
                            w.mul(&MappingClassWord::from_syllables(&[(g as i64, e)]).unwrap()),
                        );
                    }
                }
            }
            frontier = next;
        }
    }
}
