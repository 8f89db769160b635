//! Builds a few members of the infinite families and prints their reports.

use dzpairs::seriesgen::{construct, series_d, SeriesParams, SplitVariant};

fn main() -> dzpairs::Result<()> {
    let d = series_d(1, 1)?;
    println!("{d}\n");

    let picks = [
        SeriesParams::A { s: 2, t: 1, k: 3 },
        SeriesParams::C { s: 3, t: 1, k: 1, l: 2 },
        SeriesParams::EEven { s: 1, t: 2, k: 1, l: 2, r: 1 },
        SeriesParams::F { k: 3, l: 1, m: 2 },
        SeriesParams::J { k: 3 },
        SeriesParams::SelfDual { p: 2, q: 5 },
        SeriesParams::SplitOrbit { k: 4, variant: SplitVariant::AsymmetricAmended },
    ];
    for p in &picks {
        let pair = construct(p)?;
        let report = pair.report()?;
        println!(
            "{:<40} n = {:<3} deg R = {} (minimum {}) passport {}",
            p.to_string(),
            report.n,
            report.deg_r_observed,
            report.deg_r_required,
            pair.passport
        );
    }

    match construct(&SeriesParams::SplitOrbit { k: 4, variant: SplitVariant::Asymmetric }) {
        Err(e) => println!("\nas printed: {e}"),
        Ok(_) => println!("\nas printed: verifies"),
    }
    Ok(())
}
