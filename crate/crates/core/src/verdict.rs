use std::fmt;

/// The property a counterexample violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// A panel with fewer than two chambers.
    ThinPanel,
    Connectivity,
    Wd1,
    Wd2,
    Wd3,
    /// Weyl distance `s` disagrees with `s`-adjacency.
    Adjacency,
    /// Galleries of a reduced type do not match the Weyl distance.
    Gallery,
    PanelSize,
    ResidueBijection,
    FlipClosure,
    Deck,
}

impl Axiom {
    pub fn code(self) -> &'static str {
        match self {
            Axiom::ThinPanel => "thin-panel",
            Axiom::Connectivity => "connectivity",
            Axiom::Wd1 => "WD1",
            Axiom::Wd2 => "WD2",
            Axiom::Wd3 => "WD3",
            Axiom::Adjacency => "adjacency",
            Axiom::Gallery => "gallery",
            Axiom::PanelSize => "panel-size",
            Axiom::ResidueBijection => "residue-bijection",
            Axiom::FlipClosure => "flip-closure",
            Axiom::Deck => "deck",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// A concrete counterexample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: Axiom,
    pub chambers: Vec<String>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Violation),
}

impl Verdict {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn violation(&self) -> Option<&Violation> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(v) => Some(v),
        }
    }

    pub(crate) fn fail(axiom: Axiom, chambers: Vec<String>, detail: impl Into<String>) -> Self {
        Verdict::Fail(Violation {
            axiom,
            chambers,
            detail: detail.into(),
        })
    }
}
