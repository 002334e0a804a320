//! Regenerates the `gold.json` files under `fixtures/` from the contract
//! oracle, keeping the stored answers in lockstep with the adjudication
//! logic. Run from the workspace root:
//!
//! ```text
//! cargo run -p ccx --example regen_gold
//! ```

use std::path::Path;

use ccx::harness::{gold_entries, write_gold};

fn main() {
    let entries = gold_entries();
    for set in ["fixtures/o1", "fixtures/4o"] {
        let path = Path::new(set).join("gold.json");
        write_gold(&path, &entries).unwrap_or_else(|e| panic!("writing {}: {e}", path.display()));
        println!("wrote {}", path.display());
    }
}
