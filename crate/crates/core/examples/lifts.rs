//! Substituting x^d: sometimes a new minimal pair, sometimes not.

use dzpairs::catalog::catalog_get;
use dzpairs::seriesgen::power_lift;

fn main() -> dzpairs::Result<()> {
    for (name, d, target) in [("L", 2, "R"), ("S", 3, "relaxed_cubeS")] {
        let base = catalog_get(name)?.dz_pair()?;
        let lifted = power_lift(base, d)?;
        let stored = catalog_get(target)?;
        let nominal = stored.dz_pair()?.report()?;
        println!("{name}(x^{d}): passport {}", lifted.pair.passport);
        println!("  equals {target}: {}", lifted.pair.p == stored.dz_pair()?.p && lifted.pair.q == stored.dz_pair()?.q);
        println!(
            "  against {}: deg R = {}, minimum {}, minimal {}",
            stored.dz_pair()?.passport,
            nominal.deg_r_observed,
            nominal.deg_r_required,
            nominal.minimal
        );
    }
    Ok(())
}
