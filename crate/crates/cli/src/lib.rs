//! Command-line front end: single-tuple checks, batch scans over CSV tables
//! and the subconstituent scan.

pub mod report;
pub mod scan;

use srg_core::Verdict;

/// Process exit code for a verdict.
pub fn exit_code(verdict: Verdict) -> i32 {
    match verdict {
        Verdict::Inconclusive => 0,
        Verdict::Nonexistent => 10,
        Verdict::InfeasibleClassical => 11,
        Verdict::NotApplicable => 12,
    }
}

pub const EXIT_INVALID_INPUT: i32 = 2;
pub const EXIT_IO: i32 = 3;
