use crate::checks::{run_all, Check, Tally};
use crate::output::Format;
use crate::random::InstanceGenerator;
use hepta::HeptaParams;
use std::collections::BTreeMap;
use std::fmt::Write;

/// Shift for the characteristic-polynomial check, in `[−6, 6)`.
pub fn draw_shift(rng: &mut InstanceGenerator) -> f64 {
    3.0 * rng.next_coeff()
}

#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub instance: usize,
    pub params: HeptaParams,
    pub check: Check,
    pub ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct VerifyReport {
    pub instances: usize,
    pub tallies: BTreeMap<Check, Tally>,
    pub failures: Vec<Failure>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn add(&mut self, params: &HeptaParams, t: f64) {
        let index = self.instances;
        self.instances += 1;
        for (check, outcome) in run_all(params, t) {
            self.tallies.entry(check).or_default().record(outcome);
            if outcome.is_fail() {
                self.failures.push(Failure {
                    instance: index,
                    params: *params,
                    check,
                    ratio: outcome.ratio().unwrap_or(f64::INFINITY),
                });
            }
        }
    }

    pub fn render(&self, format: Format) -> String {
        let mut out = String::new();
        match format {
            Format::Text => {
                writeln!(
                    out,
                    "{:<16}{:>8}{:>8}{:>9}  worst_ratio",
                    "check", "passed", "failed", "skipped"
                )
                .unwrap();
                for (check, t) in &self.tallies {
                    writeln!(
                        out,
                        "{:<16}{:>8}{:>8}{:>9}  {:.3e}",
                        check.name(),
                        t.passed,
                        t.failed,
                        t.skipped,
                        t.worst
                    )
                    .unwrap();
                }
                for f in &self.failures {
                    writeln!(
                        out,
                        "FAIL instance {} n={} a={:e} b={:e} c={:e} d={:e} {} ratio={:.3e}",
                        f.instance,
                        f.params.n(),
                        f.params.a(),
                        f.params.b(),
                        f.params.c(),
                        f.params.d(),
                        f.check.name(),
                        f.ratio
                    )
                    .unwrap();
                }
                writeln!(
                    out,
                    "instances {}: {}",
                    self.instances,
                    if self.passed() { "PASS" } else { "FAIL" }
                )
                .unwrap();
            }
            Format::Csv => {
                out.push_str("check,passed,failed,skipped,worst_ratio\n");
                for (check, t) in &self.tallies {
                    writeln!(
                        out,
                        "{},{},{},{},{:.3e}",
                        check.name(),
                        t.passed,
                        t.failed,
                        t.skipped,
                        t.worst
                    )
                    .unwrap();
                }
            }
        }
        out
    }
}

pub fn verify_instance(params: &HeptaParams, t: f64) -> VerifyReport {
    let mut report = VerifyReport::default();
    report.add(params, t);
    report
}

/// `count` instances from the documented stream: for each, the size and
/// coefficients, then the shift.
pub fn verify_random(count: usize, max_n: usize, seed: u64) -> VerifyReport {
    let mut rng = InstanceGenerator::new(seed);
    let mut report = VerifyReport::default();
    for _ in 0..count {
        let params = rng.next_instance(max_n);
        let t = draw_shift(&mut rng);
        report.add(&params, t);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_random_run_passes_and_is_stable() {
        let a = verify_random(20, 12, 3);
        assert!(a.passed(), "{}", a.render(Format::Text));
        assert_eq!(
            a.render(Format::Text),
            verify_random(20, 12, 3).render(Format::Text)
        );
        assert_eq!(a.tallies.len(), Check::ALL.len());
    }
}
