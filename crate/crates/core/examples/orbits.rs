//! Enumerates the trees of some passports, with symmetry and self-duality.

use dzpairs::treecombi::{enumerate_orbit, enumerate_orbit_bounded, is_self_dual, is_unitree, symmetry_order, Passport};

fn main() -> dzpairs::Result<()> {
    for text in ["7,1|2,2,2,1,1", "6,1,1|3,3,1,1", "3^10|2^15", "7,7,7|3^7", "7,1^5|9,3"] {
        let passport: Passport = text.parse()?;
        let trees = enumerate_orbit(&passport)?;
        println!("{passport}: {} tree(s)", trees.len());
        for t in &trees {
            let dual = if is_self_dual(t) { "  self-dual" } else { "" };
            println!("  {t}  symmetry {}{dual}", symmetry_order(t));
        }
    }

    let big: Passport = "9^5|5^9".parse()?;
    println!("{big}: {} trees", enumerate_orbit_bounded(&big, 45)?.len());
    println!("3^8|2^12 is a unitree passport: {}", is_unitree(&"3^8|2^12".parse()?)?);
    Ok(())
}
