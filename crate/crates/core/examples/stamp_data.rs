//! Verifies the seed and lantern candidates and writes the stamped data files.
//! Usage: stamp_data <seed letters json> <lantern json> <out dir>

use g2lf::artifact::{FactorizationFile, LanternFile};
use g2lf::factorization::{type_of, LanternConfig, PositiveFactorization};
use g2lf::mcg::Curve;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let letters: Vec<Curve> =
        serde_json::from_str(&std::fs::read_to_string(&args[0]).unwrap()).unwrap();
    let cfg: LanternConfig =
        serde_json::from_str(&std::fs::read_to_string(&args[1]).unwrap()).unwrap();
    let pf = PositiveFactorization::new(letters);
    println!("seed type {}", type_of(&pf));
    let seed = FactorizationFile::stamped(&pf).expect("seed verifies");
    let lantern = LanternFile::stamped(&cfg).expect("lantern verifies");
    let out = std::path::Path::new(&args[2]);
    std::fs::write(
        out.join("seed_4_3.json"),
        serde_json::to_string_pretty(&seed).unwrap() + "\n",
    )
    .unwrap();
    std::fs::write(
        out.join("lantern.json"),
        serde_json::to_string_pretty(&lantern).unwrap() + "\n",
    )
    .unwrap();
}
