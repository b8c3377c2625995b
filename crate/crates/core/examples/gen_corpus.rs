//! Writes the fixture algebras as JSON.
//!
//! Usage: `cargo run -p sepcheck-core --example gen_corpus [OUT_DIR]`
//! (default `algebras/` at the workspace root).

use std::path::PathBuf;

use sepcheck::algebra::standard_catalog;

fn main() -> std::io::Result<()> {
    let out = std::env::args_os()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../algebras"));
    std::fs::create_dir_all(&out)?;
    for entry in standard_catalog() {
        let path = out.join(&entry.file);
        std::fs::write(&path, entry.algebra.to_json() + "\n")?;
        println!("{}", path.display());
    }
    Ok(())
}
