use std::fmt;

use super::{check, NdError, Path, ProofTree};
use crate::syntax::{complexity, Formula};

/// A maximal chain of occurrences of one formula, each but the last a
/// minor premise of a del-rule whose conclusion is the next.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub formula: Formula,
    pub length: usize,
    /// From the topmost occurrence down to the last.
    pub positions: Vec<Path>,
}

impl Segment {
    pub fn end(&self) -> &Path {
        self.positions.last().expect("segments are nonempty")
    }
}

/// Segments that end in the same major premise of an elimination, where
/// each is longer than one or starts at an introduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cut {
    /// The major premise occurrence.
    pub end: Path,
    pub formula: Formula,
    pub rank: usize,
    /// Indices into [`CutReport::segments`].
    pub segments: Vec<usize>,
    /// Sum of the segment lengths.
    pub length: usize,
}

/// Lexicographic normalization measure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Measure {
    pub cutrank: usize,
    /// Total length of the segments of critical cuts.
    pub length: usize,
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(cutrank {}, length {})", self.cutrank, self.length)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutReport {
    pub segments: Vec<Segment>,
    pub cuts: Vec<Cut>,
    /// Largest cut rank, 0 without cuts.
    pub cutrank: usize,
    /// Indices into `cuts` of the cuts of rank `cutrank`.
    pub critical: Vec<usize>,
}

impl CutReport {
    pub fn measure(&self) -> Measure {
        Measure {
            cutrank: self.cutrank,
            length: self.critical.iter().map(|&i| self.cuts[i].length).sum(),
        }
    }

    /// Critical cuts with no other critical cut ending above them.
    pub fn top_critical(&self) -> Vec<&Cut> {
        let crit: Vec<&Cut> = self.critical.iter().map(|&i| &self.cuts[i]).collect();
        crit.iter()
            .filter(|c| {
                !crit
                    .iter()
                    .any(|o| o.end.len() > c.end.len() && o.end.starts_with(&c.end))
            })
            .copied()
            .collect()
    }

    /// The top critical cut furthest right in premise order.
    pub fn rightmost_top_critical(&self) -> Option<&Cut> {
        self.top_critical()
            .into_iter()
            .max_by(|a, b| a.end.cmp(&b.end))
    }
}

fn is_del_conclusion(t: &ProofTree) -> bool {
    t.rule_tag().is_some_and(|r| r.is_del())
}

/// Segments, cuts, cutrank and critical cuts of a checked proof.
pub fn analyze(p: &ProofTree) -> Result<CutReport, NdError> {
    check(p)?;
    let mut segments = Vec::new();
    for (path, node) in p.nodes() {
        if is_del_conclusion(node) {
            continue;
        }
        let mut positions = vec![path.clone()];
        let mut here = path;
        while let Some((&last, parent_path)) = here.split_last() {
            let parent = p.at(parent_path).expect("prefix of a node path");
            if !(is_del_conclusion(parent) && last > 0) {
                break;
            }
            here = parent_path.to_vec();
            positions.push(here.clone());
        }
        segments.push(Segment {
            formula: node.conclusion().clone(),
            length: positions.len(),
            positions,
        });
    }

    let mut cuts: Vec<Cut> = Vec::new();
    for (i, seg) in segments.iter().enumerate() {
        let end = seg.end();
        let Some((&last, parent_path)) = end.split_last() else {
            continue;
        };
        let parent = p.at(parent_path).expect("prefix of a node path");
        let ends_major = last == 0 && parent.rule_tag().is_some_and(|r| r.is_elim());
        let start = p.at(&seg.positions[0]).expect("segment position");
        let starts_intro = start.rule_tag().is_some_and(|r| r.is_intro());
        if !(ends_major && (seg.length > 1 || starts_intro)) {
            continue;
        }
        match cuts.iter_mut().find(|c| c.end == *end) {
            Some(c) => {
                c.segments.push(i);
                c.length += seg.length;
            }
            None => cuts.push(Cut {
                end: end.clone(),
                formula: seg.formula.clone(),
                rank: complexity(&seg.formula).expect("checked proofs are ≻-free"),
                segments: vec![i],
                length: seg.length,
            }),
        }
    }
    let cutrank = cuts.iter().map(|c| c.rank).max().unwrap_or(0);
    let critical = (0..cuts.len())
        .filter(|&i| cuts[i].rank == cutrank)
        .collect();
    Ok(CutReport {
        segments,
        cuts,
        cutrank,
        critical,
    })
}

/// No critical cuts remain.
pub fn is_normal(p: &ProofTree) -> Result<bool, NdError> {
    Ok(analyze(p)?.critical.is_empty())
}
