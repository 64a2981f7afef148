use rayon::prelude::*;
use scrollsec::algebra::Field;
use scrollsec::geometry::ScrollSpec;
use scrollsec::gitcheck::git_check_report;
use scrollsec::groebner::GroebnerConfig;
use scrollsec::invariants::{self as inv, SmoothnessKind, VerificationReport};

use crate::run::CliError;

const MAX_A: usize = 3;
const MAX_D: usize = 6;
const MAX_BLOWUP_A: i64 = 5;
const MAX_CONIC_A: u32 = 3;
const SAMPLES: usize = 20;
const TRIALS: usize = 50;
const GIT_PAIRS: usize = 100;
const GIT_RANDOM: usize = 1000;

#[derive(Clone, Copy, Debug)]
enum Job {
    Degree(ScrollSpec),
    Veronese(usize),
    Adp(ScrollSpec),
    Components(ScrollSpec),
    Span(ScrollSpec),
    TangentCone(usize),
    Chart(ScrollSpec),
    Smooth(SmoothnessKind),
    Blowup(i64),
    Conic(u32),
    LemmaSec(ScrollSpec),
    Git,
}

/// Scrolls `S_{a,b}` with `a ⩽ b`, `a ⩽ 3` and `lo ⩽ a + b ⩽ hi`.
fn scrolls(lo: usize, hi: usize) -> Vec<ScrollSpec> {
    (lo..=hi).flat_map(|r| (1..=MAX_A.min(r / 2)).map(move |a| ScrollSpec::new(a, r - a).expect("a ⩾ 1"))).collect()
}

fn jobs(max_r: usize) -> Vec<Job> {
    let mut jobs = Vec::new();
    jobs.extend(scrolls(2, max_r).into_iter().map(Job::Degree));
    jobs.extend((2..=MAX_D).map(Job::Veronese));
    jobs.extend(scrolls(4, max_r).into_iter().map(Job::Adp));
    jobs.extend(scrolls(4, max_r).into_iter().map(Job::Components));
    jobs.extend(scrolls(2, max_r).into_iter().map(Job::Span));
    jobs.extend((3..=max_r).map(Job::TangentCone));
    jobs.extend(scrolls(3, max_r).into_iter().map(Job::Chart));
    jobs.extend(scrolls(2, max_r).into_iter().map(|s| Job::Smooth(SmoothnessKind::Scroll(s))));
    jobs.extend((3..=max_r).map(|r| Job::Smooth(SmoothnessKind::TangentCone(r))));
    jobs.extend((1..=MAX_BLOWUP_A).map(Job::Blowup));
    jobs.extend((2..=MAX_CONIC_A).map(Job::Conic));
    jobs.extend(scrolls(2, max_r).into_iter().map(Job::LemmaSec));
    jobs.push(Job::Git);
    jobs
}

fn run_job<F: Field>(
    job: Job,
    seed: u64,
    domain: &F::Domain,
    config: &GroebnerConfig,
) -> Result<VerificationReport, CliError> {
    Ok(match job {
        Job::Degree(s) => inv::degree_secant_fourfold::<F>(s, seed, domain, config)?,
        Job::Veronese(d) => inv::degree_veronese::<F>(d, seed, domain, config)?,
        Job::Adp(s) => inv::apparent_double_points::<F>(s, seed, domain, config)?,
        Job::Components(s) => inv::component_degrees::<F>(s, seed, domain, config)?,
        Job::Span(s) => inv::span_dimension::<F>(s, seed, domain)?,
        Job::TangentCone(r) => inv::tangent_cone_invariants::<F>(r, SAMPLES, seed, domain, config)?,
        Job::Chart(s) => inv::verify_chart::<F>(s, seed, domain, config)?,
        Job::Smooth(kind) => inv::smoothness_sample::<F>(kind, SAMPLES, seed, domain)?,
        Job::Blowup(a) => inv::blowup_intersection(a)?,
        Job::Conic(a) => inv::conic_linear_system::<F>(a, domain)?,
        Job::LemmaSec(s) => inv::lemma_sec_check::<F>(s, TRIALS, seed, domain)?,
        Job::Git => git_check_report::<F>(GIT_PAIRS, GIT_RANDOM, seed, domain)?,
    })
}

/// Every report up to `max_r`, sorted by claim; jobs run in parallel.
pub fn run_suite<F: Field>(
    max_r: usize,
    seed: u64,
    domain: &F::Domain,
    config: &GroebnerConfig,
) -> (Vec<VerificationReport>, Vec<CliError>) {
    let results: Vec<(Job, Result<VerificationReport, CliError>)> =
        jobs(max_r).into_par_iter().map(|job| (job, run_job::<F>(job, seed, domain, config))).collect();
    let mut reports = Vec::new();
    let mut failures = Vec::new();
    for (job, result) in results {
        match result {
            Ok(r) => reports.push(r),
            Err(CliError::Budget(m)) => failures.push(CliError::Budget(format!("{job:?}: {m}"))),
            Err(CliError::Usage(m) | CliError::Failed(m)) => failures.push(CliError::Failed(format!("{job:?}: {m}"))),
        }
    }
    reports.sort_by(|x, y| x.claim.cmp(&y.claim));
    (reports, failures)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scroll_ranges() {
        let s: Vec<(usize, usize)> = scrolls(2, 5).iter().map(|s| (s.a(), s.b())).collect();
        assert_eq!(s, vec![(1, 1), (1, 2), (1, 3), (2, 2), (1, 4), (2, 3)]);
    }

    #[test]
    fn every_claim_is_scheduled() {
        let names: std::collections::BTreeSet<String> =
            jobs(5).iter().map(|j| format!("{j:?}").split('(').next().unwrap().to_string()).collect();
        assert_eq!(names.len(), 12);
    }
}
