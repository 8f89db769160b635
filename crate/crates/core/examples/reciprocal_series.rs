//! Reciprocal polynomials: tree T seen from infinity, and the square-root
//! series behind series J.

use dzpairs::catalog::catalog_get;
use dzpairs::seriesgen::{series_j, series_j_root};

fn main() -> dzpairs::Result<()> {
    let t = catalog_get("T")?.dz_pair()?;
    let n = t.degree();
    let diff = &t.p.reciprocal(n)? - &t.q.reciprocal(n)?;
    println!("T: P* - Q* = {diff}");
    println!("   lowest term x^{}", diff.low_degree().unwrap_or(0));

    let root = series_j_root(3, 12)?;
    println!("\nsqrt(P*) for k = 3 through x^12:");
    for (i, c) in root.coeffs().iter().enumerate() {
        println!("  x^{i:<2} {c}");
    }
    let j = series_j(3)?;
    println!("\n{j}");
    Ok(())
}
