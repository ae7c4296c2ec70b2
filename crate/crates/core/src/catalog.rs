//! Built-in example algebras, each shipped as structure-equation source text
//! plus (where available) a frozen table of expected dimensions.
//!
//! The seven presets:
//!
//! - `iwasawa` — the 2-step nilpotent, holomorphically parallelizable
//!   structure dφ³ = −φ¹∧φ²;
//! - `class-ii-a`, `class-ii-b`, `class-iii-a`, `class-iii-b` — deformed
//!   variants, one witness per class distinguishable by Bott-Chern and
//!   Aeppli dimensions (the classes differ at h^{2,0}_BC, h^{1,1}_BC-dual
//!   entries and h^{2,2}_BC);
//! - `torus3` — the abelian structure, whose tables are binomial products;
//! - `solvable-control` — solvable but not nilpotent, kept as the control
//!   case where Poincaré, Serre and Bott-Chern/Aeppli dualities all fail.
//!
//! Expected tables are stored as CSV fixtures frozen from independent
//! computation, never regenerated by this crate's own code; the tests here
//! re-derive every number and compare.

use crate::cohomology::{tables_from_csv, CohomologyTable};
use crate::structure::{parse, Presentation};

/// One named example: source text plus optional frozen expectations.
#[derive(Debug, Clone, Copy)]
pub struct Preset {
    pub name: &'static str,
    pub summary: &'static str,
    pub source: &'static str,
    pub expected_csv: Option<&'static str>,
}

impl Preset {
    /// Parse the preset's structure equations.
    pub fn presentation(&self) -> Presentation {
        parse(self.source).expect("preset sources always parse")
    }

    /// The frozen dimension tables, if this preset ships any.
    pub fn expected_tables(&self) -> Option<Vec<CohomologyTable>> {
        self.expected_csv
            .map(|csv| tables_from_csv(csv).expect("preset fixtures always parse"))
    }
}

const PRESETS: [Preset; 7] = [
    Preset {
        name: "iwasawa",
        summary: "2-step nilpotent, holomorphically parallelizable: d f3 = -f1^f2",
        source: include_str!("../presets/iwasawa.lie"),
        expected_csv: Some(include_str!("../presets/iwasawa.expected.csv")),
    },
    Preset {
        name: "class-ii-a",
        summary: "deformed structure, class (ii.a): delta = 0, rank S = 1",
        source: include_str!("../presets/class-ii-a.lie"),
        expected_csv: Some(include_str!("../presets/class-ii-a.expected.csv")),
    },
    Preset {
        name: "class-ii-b",
        summary: "deformed structure, class (ii.b): delta = 0, rank S = 2",
        source: include_str!("../presets/class-ii-b.lie"),
        expected_csv: Some(include_str!("../presets/class-ii-b.expected.csv")),
    },
    Preset {
        name: "class-iii-a",
        summary: "deformed structure, class (iii.a): delta != 0, rank S = 1",
        source: include_str!("../presets/class-iii-a.lie"),
        expected_csv: Some(include_str!("../presets/class-iii-a.expected.csv")),
    },
    Preset {
        name: "class-iii-b",
        summary: "deformed structure, class (iii.b): delta != 0, rank S = 2",
        source: include_str!("../presets/class-iii-b.lie"),
        expected_csv: Some(include_str!("../presets/class-iii-b.expected.csv")),
    },
    Preset {
        name: "torus3",
        summary: "abelian: all differentials vanish, tables are binomial",
        source: include_str!("../presets/torus3.lie"),
        expected_csv: None,
    },
    Preset {
        name: "solvable-control",
        summary: "solvable, NOT nilpotent: control case where dualities fail",
        source: include_str!("../presets/solvable-control.lie"),
        expected_csv: None,
    },
];

/// All presets, in catalog order.
pub fn list() -> &'static [Preset] {
    &PRESETS
}

/// Look a preset up by name.
pub fn get(name: &str) -> Option<&'static Preset> {
    PRESETS.iter().find(|p| p.name == name)
}
