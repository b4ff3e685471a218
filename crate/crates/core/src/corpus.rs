//! Built-in reference diagrams.
//!
//! Every entry was authored as a braid closure and validated against an
//! independent bracket implementation before being frozen here; the test
//! suites treat these diagrams as ground truth.

use crate::diagram::{parse_pd, LinkDiagram};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("no corpus entry named {0:?}")]
pub struct UnknownName(pub String);

/// One embedded diagram: its lookup name, PD text, and a display line.
#[derive(Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub pd: &'static str,
    pub about: &'static str,
}

pub const CORPUS: [CorpusEntry; 7] = [
    CorpusEntry {
        name: "unknot",
        pd: "# crossing-free unknot\nU\n",
        about: "trivial knot, 0 crossings",
    },
    CorpusEntry {
        name: "trefoil_left",
        pd: "# left-hand trefoil, writhe -3\n\
             X 1 4 2 5\n\
             X 3 6 4 1\n\
             X 5 2 6 3\n",
        about: "knot, 3 crossings, writhe -3",
    },
    CorpusEntry {
        name: "trefoil_right",
        pd: "# right-hand trefoil, writhe +3\n\
             X 4 2 5 1\n\
             X 6 4 1 3\n\
             X 2 6 3 5\n",
        about: "knot, 3 crossings, writhe +3",
    },
    CorpusEntry {
        name: "figure8",
        pd: "# figure-eight knot, amphichiral\n\
             X 4 1 5 2\n\
             X 2 8 3 7\n\
             X 8 5 1 6\n\
             X 6 4 7 3\n",
        about: "knot, 4 crossings, writhe 0",
    },
    CorpusEntry {
        name: "hopf_pos",
        pd: "# Hopf link with linking number +1\n\
             X 1 3 2 4\n\
             X 3 1 4 2\n",
        about: "2-component link, lk = +1 (not algebraically split)",
    },
    CorpusEntry {
        name: "whitehead",
        pd: "# Whitehead link: linking number 0, each component unknotted\n\
             X 10 1 5 2\n\
             X 2 8 3 7\n\
             X 8 5 9 6\n\
             X 6 4 7 3\n\
             X 4 9 1 10\n",
        about: "2-component Brunnian link, 5 crossings, algebraically split",
    },
    CorpusEntry {
        name: "borromean",
        pd: "# Borromean rings: removing any component unlinks the rest\n\
             X 5 1 6 2\n\
             X 2 9 3 12\n\
             X 9 6 10 7\n\
             X 7 4 8 3\n\
             X 4 10 1 11\n\
             X 11 5 12 8\n",
        about: "3-component Brunnian link, 6 crossings, algebraically split",
    },
];

/// Looks up an embedded corpus entry by name.
pub fn builtin_corpus(name: &str) -> Result<&'static CorpusEntry, UnknownName> {
    CORPUS
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| UnknownName(name.to_owned()))
}

/// Parses the named corpus entry into a diagram.
pub fn corpus_diagram(name: &str) -> Result<LinkDiagram, UnknownName> {
    let entry = builtin_corpus(name)?;
    Ok(parse_pd(entry.pd).expect("embedded corpus text is valid"))
}
