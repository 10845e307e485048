// temporary probe; removed before ship
use std::time::Instant;

use hecke_fusion::verify::{run_suite, VerifyOptions};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "presentation".into());
    let lmax: usize = std::env::args().nth(2).and_then(|s| s.parse().ok()).unwrap_or(5);
    let opts = VerifyOptions { lmax, seed: 0 };
    let t0 = Instant::now();
    let report = run_suite(&name, &opts).unwrap();
    println!(
        "{name} lmax={lmax}: {} checks, passed={} in {:?}",
        report.results.len(),
        report.passed(),
        t0.elapsed()
    );
    if let Some(f) = report.first_failure() {
        println!("first failure: {}/{} {} {:?}", f.suite, f.label, f.case, f.detail);
    }
}
