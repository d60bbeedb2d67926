//! Partitions of n in decreasing lexicographic order, with their SYT counts.
//!
//! ```bash
//! cargo run -p hookcontent --example enumerate_partitions -- 6
//! ```

use hookcontent::partitions::partitions_of;
use hookcontent::tableaux::syt_count;

fn main() -> Result<(), hookcontent::Error> {
    let n: usize = std::env::args()
        .nth(1)
        .map_or(5, |s| s.parse().expect("n is an integer"));
    let mut total = num_bigint::BigUint::from(0u32);
    for lambda in partitions_of(n) {
        let f = syt_count(&lambda)?;
        println!("({lambda}) SYT = {f}");
        total += f.value() * f.value();
    }
    println!("p({n}) = {}, Σ SYT² = {total}", partitions_of(n).count());
    Ok(())
}
