//! Walks the embedded catalog and verifies every entry.

use dzpairs::catalog::{catalog_get, catalog_verify_all};

fn main() -> dzpairs::Result<()> {
    let report = catalog_verify_all();
    print!("{}", report.to_text());
    println!("all passed: {}\n", report.all_passed());

    for name in ["K", "Q", "T"] {
        let e = catalog_get(name)?;
        let pair = e.dz_pair()?;
        println!("{name}: {}", e.notes);
        println!("  P - Q = {}", pair.r);
        if let Some(t) = &e.tree {
            println!("  tree {t}");
        }
    }

    let field = catalog_get("pgl27_galois")?;
    println!("\n{}: {}", field.name, field.notes);
    Ok(())
}
