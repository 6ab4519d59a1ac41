//! Parameter sweeps that compare enumerations with closed forms, plus the
//! single-instance queries behind the command line.

pub mod checks;
pub mod config;
pub mod query;
pub mod report;
pub mod trace;

use rayon::prelude::*;

use crate::error::{Error, Result};

pub use checks::{Check, CheckRecord, Params, Status};
pub use config::{Format, SweepConfig};
pub use report::{Report, Summary};

/// Runs every selected check. Records come back in task order whatever the
/// worker count.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Report> {
    let tasks: Vec<_> = cfg.selected_checks().into_iter().flat_map(|c| checks::tasks_for(c, cfg)).collect();
    let run = || tasks.par_iter().map(|t| checks::run_task(t, cfg.timing)).collect::<Vec<_>>();
    let records = match cfg.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::Config(format!("cannot start {jobs} workers: {e}")))?
            .install(run),
        None => run(),
    };
    Ok(Report::new(records))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reports_do_not_depend_on_workers() {
        let base = SweepConfig { max_n: 4, max_shape: 5, max_hook: 6, timing: false, ..SweepConfig::default() };
        let one = run_sweep(&SweepConfig { jobs: Some(1), ..base.clone() }).unwrap();
        let four = run_sweep(&SweepConfig { jobs: Some(4), ..base }).unwrap();
        assert_eq!(one, four);
        assert!(!one.has_mismatch());
        for format in [Format::Table, Format::Json, Format::Csv] {
            assert_eq!(one.render(format).unwrap(), four.render(format).unwrap());
        }
        let s = one.summary;
        assert_eq!(s.checked, s.matched + s.mismatched + s.skipped);
    }
}
