//! The fourteen cover groups of 3-generated 4-transposition groups and
//! their named 4-transposition quotients.

use super::parse::Presentation;

const INVOLUTIONS: &str = "x^2, y^2, z^2";

#[derive(Clone, Debug)]
pub struct CoverGroup {
    pub name: &'static str,
    pub case: &'static [&'static str],
    pub extra: &'static [&'static str],
    pub order: usize,
    pub four_transposition: bool,
}

impl CoverGroup {
    pub fn presentation_text(&self) -> String {
        let rels: Vec<&str> = self.case.iter().chain(self.extra).copied().collect();
        format!("<x,y,z | {}, {}>", INVOLUTIONS, rels.join(", "))
    }

    pub fn presentation(&self) -> Presentation {
        Presentation::parse(&self.presentation_text()).expect("built-in presentation")
    }
}

const CASE1: &[&str] = &["(x*y)^3", "(x*z)^3", "(y*z)^3"];
const CASE2: &[&str] = &["(x*y)^3", "(x*z)^3", "(y*z)^4"];
const CASE3: &[&str] = &["(x*y)^3", "(x*z)^4", "(y*z)^4"];
const CASE4: &[&str] = &["(x*y)^4", "(x*z)^4", "(y*z)^4"];

pub const COVER_GROUPS: &[CoverGroup] = &[
    CoverGroup { name: "G1", case: CASE1, extra: &["(x*y^z)^3"], order: 54, four_transposition: true },
    CoverGroup { name: "G2", case: CASE1, extra: &["(x*y^z)^4"], order: 96, four_transposition: true },
    CoverGroup { name: "G3", case: CASE2, extra: &["(x*y^z)^3"], order: 96, four_transposition: true },
    CoverGroup { name: "G4", case: CASE2, extra: &["(x*y^z)^4"], order: 336, four_transposition: true },
    CoverGroup { name: "G5", case: CASE3, extra: &["(x*y^z)^3", "(x*z^y)^3"], order: 2, four_transposition: true },
    CoverGroup { name: "G6", case: CASE3, extra: &["(x*y^z)^3", "(x*z^y)^4"], order: 384, four_transposition: true },
    CoverGroup { name: "G7", case: CASE3, extra: &["(x*y^z)^4", "(x*z^y)^3"], order: 336, four_transposition: true },
    CoverGroup { name: "G8", case: CASE3, extra: &["(x*y^z)^4", "(x*z^y)^4"], order: 2304, four_transposition: false },
    CoverGroup { name: "G9", case: CASE4, extra: &["(x*y^z)^3", "(x*z^y)^3"], order: 336, four_transposition: true },
    CoverGroup { name: "G10", case: CASE4, extra: &["(x*y^z)^3", "(x*z^y)^4"], order: 2304, four_transposition: false },
    CoverGroup { name: "G11", case: CASE4, extra: &["(x*y^z)^4", "(x*z^y)^3"], order: 2304, four_transposition: false },
    CoverGroup {
        name: "G12",
        case: CASE4,
        extra: &["(x*y^z)^4", "(x*z^y)^4", "(y*z^x)^3"],
        order: 2304,
        four_transposition: false,
    },
    CoverGroup {
        name: "G13",
        case: CASE4,
        extra: &["(x*y^z)^4", "(x*z^y)^4", "(y*z^x)^4", "(x*x^(y*z))^3"],
        order: 7776,
        four_transposition: false,
    },
    CoverGroup {
        name: "G14",
        case: CASE4,
        extra: &["(x*y^z)^4", "(x*z^y)^4", "(y*z^x)^4", "(x*x^(y*z))^4"],
        order: 32768,
        four_transposition: false,
    },
];

/// A quotient of a cover group by extra relators.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub name: &'static str,
    pub cover: &'static str,
    pub extra: &'static [&'static str],
    pub order: usize,
    pub four_transposition: bool,
    /// Enumerations large enough to be left to extended runs.
    pub extended: bool,
}

impl Quotient {
    pub fn presentation(&self) -> Presentation {
        cover(self.cover)
            .expect("known cover")
            .presentation()
            .with_relators(self.extra)
            .expect("built-in relators")
    }
}

pub const QUOTIENTS: &[Quotient] = &[
    Quotient { name: "G'8", cover: "G8", extra: &["(z*z^(x*y))^2"], order: 8, four_transposition: true, extended: false },
    Quotient { name: "G''8", cover: "G8", extra: &["(z*z^(x*y))^3"], order: 1152, four_transposition: true, extended: false },
    Quotient { name: "G'10", cover: "G10", extra: &["(z*z^(x*y))^2"], order: 8, four_transposition: true, extended: false },
    Quotient { name: "G''10", cover: "G10", extra: &["(z*z^(x*y))^3"], order: 1152, four_transposition: true, extended: false },
    Quotient { name: "G'11", cover: "G11", extra: &["(y*y^(x*z))^2"], order: 8, four_transposition: true, extended: false },
    Quotient { name: "G''11", cover: "G11", extra: &["(y*y^(x*z))^3"], order: 1152, four_transposition: true, extended: false },
    Quotient { name: "G'12", cover: "G12", extra: &["(x*x^(y*z))^2"], order: 8, four_transposition: true, extended: false },
    Quotient { name: "G''12", cover: "G12", extra: &["(x*x^(y*z))^3"], order: 1152, four_transposition: true, extended: false },
    Quotient { name: "G'13", cover: "G13", extra: &["(y*y^(x*z))^2"], order: 32, four_transposition: true, extended: true },
    Quotient { name: "G''13", cover: "G13", extra: &["(y*y^(x*z))^3"], order: 3888, four_transposition: true, extended: true },
    Quotient {
        name: "G'14",
        cover: "G14",
        extra: &["(y*y^(x*z))^4", "(z*z^(x*y))^4"],
        order: 8192,
        four_transposition: true,
        extended: true,
    },
];

pub fn cover(name: &str) -> Option<&'static CoverGroup> {
    COVER_GROUPS.iter().find(|g| g.name == name)
}

pub fn quotient(name: &str) -> Option<&'static Quotient> {
    QUOTIENTS.iter().find(|g| g.name == name)
}
