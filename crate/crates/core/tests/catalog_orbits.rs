use dzpairs::catalog::{catalog, EntryKind};
use dzpairs::treecombi::enumerate_orbit;

#[test]
fn field_orbits_account_for_the_whole_orbit() {
    let fields: Vec<_> = catalog().iter().filter(|e| matches!(e.kind, EntryKind::Field { .. })).collect();
    assert_eq!(fields.len(), 3);
    for f in fields {
        let pp = f.passport.as_ref().unwrap();
        let rational = catalog()
            .iter()
            .filter(|e| matches!(e.kind, EntryKind::Dz) && e.passport.as_ref() == Some(pp))
            .count();
        let EntryKind::Field { defining } = &f.kind else { unreachable!() };
        let degree = defining.degree().unwrap();
        assert_eq!(f.orbit_size, Some(degree), "{}", f.name);
        let trees = enumerate_orbit(pp).unwrap();
        assert_eq!(rational + degree, trees.len(), "{}: {pp}", f.name);
    }
}

#[test]
fn dz_entries_match_their_passports() {
    for e in catalog().iter().filter(|e| matches!(e.kind, EntryKind::Dz | EntryKind::Generated)) {
        let Some(pair) = &e.pair else { continue };
        let rep = pair.report().unwrap();
        assert!(rep.passes() && rep.minimal, "{}", e.name);
        assert_eq!(rep.deg_r_observed, rep.deg_r_required, "{}", e.name);
    }
}
