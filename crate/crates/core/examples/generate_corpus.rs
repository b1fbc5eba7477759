//! Regenerates the shipped corpus under `corpus/`.
//!
//! ```bash
//! cargo run --example generate_corpus            # writes crates/core/corpus
//! cargo run --example generate_corpus -- /tmp/c  # somewhere else
//! ```

use std::path::PathBuf;

use covsum::cli::generate::write_corpus;

/// Seed of the shipped corpus.
const SEED: u64 = 2024;

fn main() -> covsum::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus"));
    let n = write_corpus(&dir, SEED)?;
    println!("wrote {n} instances to {}", dir.display());
    Ok(())
}
