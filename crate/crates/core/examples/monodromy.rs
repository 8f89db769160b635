//! Expands a weighted tree into a plane map and computes its monodromy group.

use dzpairs::catalog::catalog_get;
use dzpairs::treecombi::{expand_to_map, group_order, Perm, PermPair};

fn main() -> dzpairs::Result<()> {
    for name in ["pgl27_a", "pgl27_b"] {
        let tree = catalog_get(name)?.tree.clone().expect("entry has a tree");
        let map = expand_to_map(&tree);
        println!("{name}: {tree}");
        println!("  sigma = {}  alpha = {}", map.sigma, map.alpha);
        println!("  group order {}", group_order(&map)?);
    }

    let printed = PermPair::new(
        Perm::from_cycles(8, &[&[1, 7, 6, 5, 4, 8, 3]])?,
        Perm::from_cycles(8, &[&[1, 2], &[3, 8], &[6, 7]])?,
    )?;
    let ours = expand_to_map(catalog_get("pgl27_a")?.tree.as_ref().expect("entry has a tree"));
    match ours.find_isomorphism(&printed) {
        Some(relabel) => println!("matches (1,7,6,5,4,8,3), (1,2)(3,8)(6,7) via {relabel}"),
        None => println!("no relabeling found"),
    }
    Ok(())
}
