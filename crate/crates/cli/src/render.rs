use serde::Serialize;

use g2lf::analysis::{self, CertVerdict};

use crate::Format;

#[derive(Serialize)]
struct Row {
    n: u64,
    s: u64,
    k: u64,
    signature: i64,
    euler: i64,
    slope_extremal: bool,
    minimal: CertVerdict,
    indecomposable: CertVerdict,
}

fn rows(max_k: u64) -> Vec<Row> {
    analysis::enumerate_admissible(max_k)
        .into_iter()
        .map(|t| Row {
            n: t.n,
            s: t.s,
            k: (t.n + 2 * t.s) / 10,
            signature: analysis::signature(t.n, t.s).expect("admissible"),
            euler: analysis::euler(t.n, t.s),
            slope_extremal: analysis::slope_indecomposable(t.n, t.s),
            minimal: analysis::certify_minimal(t.n, t.s)
                .expect("admissible")
                .verdict,
            indecomposable: analysis::certify_indecomposable(t.n, t.s)
                .expect("admissible")
                .verdict,
        })
        .collect()
}

fn verdict(v: CertVerdict) -> &'static str {
    match v {
        CertVerdict::Proved => "proved",
        CertVerdict::Unknown => "unknown",
    }
}

pub fn geography(max_k: u64, format: Format) -> String {
    let rows = rows(max_k);
    match format {
        Format::Json => serde_json::to_string_pretty(&rows).unwrap() + "\n",
        Format::Table => {
            let mut out = format!(
                "{:>4} {:>4} {:>3} {:>5} {:>5} {:>7} {:>9} {:>14}\n",
                "n", "s", "k", "sigma", "e", "s=2n-5", "minimal", "indecomposable"
            );
            for r in rows {
                out += &format!(
                    "{:>4} {:>4} {:>3} {:>5} {:>5} {:>7} {:>9} {:>14}\n",
                    r.n,
                    r.s,
                    r.k,
                    r.signature,
                    r.euler,
                    if r.slope_extremal { "yes" } else { "" },
                    verdict(r.minimal),
                    verdict(r.indecomposable)
                );
            }
            out
        }
    }
}
