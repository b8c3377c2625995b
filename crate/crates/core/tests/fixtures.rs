use std::collections::BTreeSet;
use std::path::PathBuf;

use sepcheck::algebra::{load_algebra, standard_catalog};

fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../algebras")
}

#[test]
fn fixture_files_match_constructors() {
    for entry in standard_catalog() {
        let path = fixture_dir().join(&entry.file);
        let loaded = load_algebra(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        assert_eq!(loaded, entry.algebra, "{}", entry.file);
    }
}

#[test]
fn no_stray_fixture_files() {
    let on_disk: BTreeSet<String> = std::fs::read_dir(fixture_dir())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .filter(|n| n.ends_with(".json"))
        .collect();
    let catalog: BTreeSet<String> = standard_catalog().into_iter().map(|e| e.file).collect();
    assert_eq!(on_disk, catalog);
}
