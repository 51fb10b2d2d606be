//! Regenerate the bundled knot table from the built-in catalog.
//!
//! Usage: `cargo run -p knotband --bin gen-table [-- path]`
//! (default path: `data/knot_table.jsonl` relative to the workspace root).

use knotband_core::notation::catalog;

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/knot_table.jsonl").into());
    let table = match catalog::full_table() {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error building table: {e}");
            std::process::exit(2);
        }
    };
    if let Err(e) = std::fs::write(&path, table.to_jsonl()) {
        eprintln!("error writing {path}: {e}");
        std::process::exit(2);
    }
    eprintln!("wrote {} rows to {path}", table.len());
}
