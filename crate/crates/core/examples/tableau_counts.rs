//! SYT and SSYT counts from the closed formulas, checked against brute force.
//!
//! ```bash
//! cargo run -p hookcontent --example tableau_counts -- 4,2,1 4
//! ```

use hookcontent::partitions::parse_partition;
use hookcontent::tableaux::{
    enumerate_ssyt, enumerate_syt, hook_content_count, ssyt_count, syt_count, ContentSign,
    FillingDimension,
};

fn main() -> Result<(), hookcontent::Error> {
    let mut args = std::env::args().skip(1);
    let lambda = parse_partition(&args.next().unwrap_or_else(|| "4,2,1".into()))?;
    let d = FillingDimension::new(
        args.next()
            .map_or(4, |s| s.parse().expect("d is an integer")),
    )?;

    println!("λ = ({lambda}), d = {d}");
    println!("SYT  by n!/∏h          : {}", syt_count(&lambda)?);
    match enumerate_syt(&lambda) {
        Ok(c) => println!("SYT  by backtracking    : {c}"),
        Err(e) => println!("SYT  by backtracking    : skipped ({e})"),
    }
    println!("SSYT by ∏(d+c)/h       : {}", ssyt_count(&lambda, d)?);
    match enumerate_ssyt(&lambda, d) {
        Ok(c) => println!("SSYT by backtracking    : {c}"),
        Err(e) => println!("SSYT by backtracking    : skipped ({e})"),
    }
    println!(
        "∏(d-c)/h (conjugate)   : {}",
        hook_content_count(&lambda, d, ContentSign::Minus)?
    );
    Ok(())
}
