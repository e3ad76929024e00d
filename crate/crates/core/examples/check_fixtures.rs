//! The tiered hyperplane-fleeing checker on three small matrices.

use glasner::check::{check, CheckConfig};
use glasner::fixtures::{power_matrix, symmetric_quadratic};
use glasner::poly::PolyMat;

fn main() {
    let cfg = CheckConfig { height: 10, ..CheckConfig::with_seed(2024) };
    for (name, a) in [
        ("x·I", PolyMat::scalar_x(2)),
        ("[[x, x²], [x², x]]", symmetric_quadratic()),
        ("[[x, x²], [x³, x⁴]]", power_matrix()),
    ] {
        let report = check(&a, &cfg);
        println!("{name}");
        println!("  degree shortcut: {}", report.degree_shortcut);
        match report.violation() {
            Some(w) => println!("  violation: v = {:?}, w = {:?}", w.v, w.w),
            None => println!("  cleared: {:?}", report.verdicts.iter().map(|v| v.status).collect::<Vec<_>>()),
        }
    }
}
