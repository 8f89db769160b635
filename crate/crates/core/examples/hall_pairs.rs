//! Integer pairs with a^3 - b^2 small compared with sqrt(a).

use dzpairs::hall::{hall_identity, hall_pairs, pell_solutions};

fn main() -> dzpairs::Result<()> {
    let id = hall_identity()?;
    println!("a(z) = {}\nb(z) = {}\nc(z) = {}", id.a, id.b, id.c);
    println!("a^3 - b^2 c = {}  (x = {}z, v = z + {})\n", id.remainder, 2 * id.sign, id.shift);

    for s in pell_solutions(5) {
        println!("u = {:<6} v = {}", s.u, s.v);
    }
    println!();
    for p in hall_pairs(6)? {
        println!("z = {:<8} a = {}  b = {}  gap = {}  bound ok: {}", p.z, p.a, p.b, p.gap, p.within_bound());
    }
    Ok(())
}
