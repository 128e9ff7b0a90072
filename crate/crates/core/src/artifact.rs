//! On-disk forms of factorizations and lantern configurations.
//!
//! `verified_by` holds the digest of the payload and is only produced by
//! [`FactorizationFile::stamped`] and [`LanternFile::stamped`], which run
//! the full checks first.

use serde::{Deserialize, Serialize};

use crate::factorization::{verify, FactorizationError, LanternConfig, PositiveFactorization};
use crate::mcg::{Curve, Verdict};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorizationFile {
    pub letters: Vec<Curve>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verified_by: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub manifest: Option<serde_json::Value>,
}

impl FactorizationFile {
    pub fn factorization(&self) -> PositiveFactorization {
        PositiveFactorization::new(self.letters.clone())
    }

    pub fn stamped(pf: &PositiveFactorization) -> Result<Self, FactorizationError> {
        match verify(pf).verdict {
            Verdict::Identity => Ok(FactorizationFile {
                letters: pf.letters.clone(),
                verified_by: Some(pf.digest()),
                manifest: None,
            }),
            v => Err(FactorizationError::NotIdentity(v)),
        }
    }

    /// Whether the stamp is present and matches the letters.
    pub fn stamp_matches(&self) -> bool {
        self.verified_by.as_deref() == Some(self.factorization().digest().as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LanternFile {
    pub boundary: [Curve; 4],
    pub interior: [Curve; 3],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verified_by: Option<String>,
}

impl LanternFile {
    pub fn config(&self) -> LanternConfig {
        LanternConfig {
            boundary: self.boundary.clone(),
            interior: self.interior.clone(),
        }
    }

    pub fn stamped(cfg: &LanternConfig) -> Result<Self, FactorizationError> {
        let report = cfg.check();
        if !report.passes() {
            return Err(FactorizationError::InvalidLantern(format!("{report:?}")));
        }
        Ok(LanternFile {
            boundary: cfg.boundary.clone(),
            interior: cfg.interior.clone(),
            verified_by: Some(cfg.digest()),
        })
    }

    pub fn stamp_matches(&self) -> bool {
        self.verified_by.as_deref() == Some(self.config().digest().as_str())
    }
}

pub const SEED_4_3_JSON: &str = include_str!("../data/seed_4_3.json");
pub const LANTERN_JSON: &str = include_str!("../data/lantern.json");

/// The bundled type-(4,3) seed, unverified.
pub fn bundled_seed() -> FactorizationFile {
    serde_json::from_str(SEED_4_3_JSON).expect("bundled seed parses")
}

/// The bundled lantern configuration, unverified.
pub fn bundled_lantern() -> LanternFile {
    serde_json::from_str(LANTERN_JSON).expect("bundled lantern parses")
}
