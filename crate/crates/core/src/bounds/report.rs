//! Verification reports and their line format.

use std::fmt;
use std::time::Duration;

use crate::bounds::cell::{BoundCell, Side};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Tight,
    Within,
    Violation,
    /// Search found no operand attaining the bound within budget.
    Inconclusive,
    /// No generator and no search requested.
    Skip,
}

impl Verdict {
    pub fn of(kappa: usize, bound: usize) -> Verdict {
        match kappa.cmp(&bound) {
            std::cmp::Ordering::Equal => Verdict::Tight,
            std::cmp::Ordering::Less => Verdict::Within,
            std::cmp::Ordering::Greater => Verdict::Violation,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Verdict::Tight => "TIGHT",
            Verdict::Within => "WITHIN",
            Verdict::Violation => "VIOLATION",
            Verdict::Inconclusive => "INCONCLUSIVE",
            Verdict::Skip => "SKIP",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One grid point. In exhaustive runs `kappa` is the largest value observed and
/// `samples` the number of operands (or pairs) checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Point {
    pub m: Option<usize>,
    pub n: usize,
    pub k: Option<usize>,
    pub side: Option<Side>,
    pub kappa: Option<usize>,
    pub bound: usize,
    pub verdict: Verdict,
    pub samples: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Tightness,
    Universal,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub cell: BoundCell,
    pub mode: Mode,
    pub points: Vec<Point>,
    pub notes: Vec<String>,
    pub seed: Option<u64>,
    pub runtime: Duration,
}

impl VerificationReport {
    pub fn count(&self, verdict: Verdict) -> usize {
        self.points.iter().filter(|p| p.verdict == verdict).count()
    }

    pub fn violations(&self) -> Vec<&Point> {
        self.points
            .iter()
            .filter(|p| p.verdict == Verdict::Violation)
            .collect()
    }

    pub fn passed(&self) -> bool {
        self.count(Verdict::Violation) == 0
    }

    pub fn all_tight(&self) -> bool {
        !self.points.is_empty() && self.count(Verdict::Tight) == self.points.len()
    }

    pub fn point_line(&self, p: &Point) -> String {
        let mut line = format!("CELL op={} class={}", self.cell.op, self.cell.class);
        if let Some(m) = p.m {
            line += &format!(" m={m}");
        }
        line += &format!(" n={}", p.n);
        if let Some(k) = p.k {
            line += &format!(" k={k}");
        }
        if let Some(side) = p.side {
            line += &format!(" side={side}");
        }
        match p.kappa {
            Some(kappa) => line += &format!(" kappa={kappa}"),
            None => line += " kappa=-",
        }
        line += &format!(" bound={} verdict={}", p.bound, p.verdict);
        if let Some(samples) = p.samples {
            line += &format!(" samples={samples}");
        }
        line
    }

    pub fn summary_line(&self) -> String {
        let mut line = format!(
            "SUMMARY cell={} points={} tight={} within={} inconclusive={} skip={} violations={}",
            self.cell,
            self.points.len(),
            self.count(Verdict::Tight),
            self.count(Verdict::Within),
            self.count(Verdict::Inconclusive),
            self.count(Verdict::Skip),
            self.count(Verdict::Violation),
        );
        if let Some(seed) = self.seed {
            line += &format!(" seed={seed}");
        }
        line
    }

    /// Point lines, then notes, then the summary.
    pub fn lines(&self) -> Vec<String> {
        let mut lines: Vec<String> = self.points.iter().map(|p| self.point_line(p)).collect();
        lines.extend(self.notes.iter().map(|n| format!("NOTE {n}")));
        lines.push(self.summary_line());
        lines
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for line in self.lines() {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}
