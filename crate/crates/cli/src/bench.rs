use crate::random::InstanceGenerator;
use hepta::oracle::{jacobi_eigen_symmetric, lu_inverse};
use hepta::{eigenvalues, inverse, nonsingularity_certificate, CertificateStatus, HeptaParams};
use std::time::{Duration, Instant};

pub const BENCH_HEADER: &str =
    "n,structured_eig_seconds,oracle_eig_seconds,structured_inverse_seconds,oracle_inverse_seconds";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub structured_eig: f64,
    pub oracle_eig: f64,
    pub structured_inverse: f64,
    pub oracle_inverse: f64,
}

impl BenchRow {
    pub fn csv(&self) -> String {
        format!(
            "{},{:.6e},{:.6e},{:.6e},{:.6e}",
            self.n,
            self.structured_eig,
            self.oracle_eig,
            self.structured_inverse,
            self.oracle_inverse
        )
    }
}

/// 4, 8, 16, … up to `max_n`; just `max_n` when it is below 4.
pub fn bench_sizes(max_n: usize) -> Vec<usize> {
    let sizes: Vec<usize> = std::iter::successors(Some(4usize), |n| n.checked_mul(2))
        .take_while(|&n| n <= max_n)
        .collect();
    if sizes.is_empty() && max_n > 0 {
        vec![max_n]
    } else {
        sizes
    }
}

/// Mean seconds per call, repeating short calls until 20 ms have elapsed.
fn seconds<T>(mut f: impl FnMut() -> T) -> f64 {
    let budget = Duration::from_millis(20);
    let start = Instant::now();
    let mut calls = 0u32;
    loop {
        std::hint::black_box(f());
        calls += 1;
        if start.elapsed() >= budget {
            break;
        }
    }
    start.elapsed().as_secs_f64() / f64::from(calls)
}

fn invertible_instance(rng: &mut InstanceGenerator, n: usize) -> HeptaParams {
    loop {
        let p = rng.next_params(n);
        if nonsingularity_certificate(&p).status == CertificateStatus::Nonsingular {
            return p;
        }
    }
}

pub fn bench_row(rng: &mut InstanceGenerator, n: usize) -> BenchRow {
    let params = invertible_instance(rng, n);
    BenchRow {
        n,
        structured_eig: seconds(|| eigenvalues(&params)),
        oracle_eig: seconds(|| jacobi_eigen_symmetric(&params.build_dense())),
        structured_inverse: seconds(|| inverse(&params)),
        oracle_inverse: seconds(|| lu_inverse(&params.build_dense())),
    }
}

pub fn run_bench(max_n: usize, seed: u64) -> Vec<BenchRow> {
    let mut rng = InstanceGenerator::new(seed);
    bench_sizes(max_n)
        .into_iter()
        .map(|n| bench_row(&mut rng, n))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_double() {
        assert_eq!(bench_sizes(40), vec![4, 8, 16, 32]);
        assert_eq!(bench_sizes(512).last(), Some(&512));
        assert_eq!(bench_sizes(3), vec![3]);
        assert!(bench_sizes(0).is_empty());
    }

    #[test]
    fn rows_are_positive() {
        let rows = run_bench(8, 1);
        assert_eq!(rows.iter().map(|r| r.n).collect::<Vec<_>>(), vec![4, 8]);
        for r in rows {
            assert!(r.structured_eig > 0.0 && r.oracle_inverse > 0.0);
            assert_eq!(r.csv().split(',').count(), BENCH_HEADER.split(',').count());
        }
    }
}
