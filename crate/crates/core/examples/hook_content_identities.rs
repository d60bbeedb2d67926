//! The bridge Q_j(0,s) = hook ratio and the identities built on it, for one shape.
//!
//! ```bash
//! cargo run -p hookcontent --example hook_content_identities -- 3,3,2,2 3
//! ```

use hookcontent::identities::{
    check_branching, check_final1, check_final2, check_qwithhook, check_ssyt_syt, hook_ratios,
};
use hookcontent::partitions::parse_partition;
use hookcontent::FillingDimension;

fn main() -> Result<(), hookcontent::Error> {
    let mut args = std::env::args().skip(1);
    let lambda = parse_partition(&args.next().unwrap_or_else(|| "3,3,2,2".into()))?;
    let d = FillingDimension::new(
        args.next()
            .map_or(4, |s| s.parse().expect("d is an integer")),
    )?;

    println!("λ = ({lambda}), n = {}, d = {d}", lambda.size());
    for (corner, ratio) in hook_ratios(&lambda) {
        println!(
            "  j={} c={:>3} ratio={ratio}",
            corner.index,
            corner.cell.content()
        );
    }
    for c in check_qwithhook(&lambda)? {
        println!(
            "QWITHHOOK j={:?}: {} = {} [{}]",
            c.corner, c.lhs, c.rhs, c.pass
        );
    }
    for c in [check_final1(&lambda), check_final2(&lambda)] {
        println!("{}: {} = {} [{}]", c.identity, c.lhs, c.rhs, c.pass);
    }
    match check_ssyt_syt(&lambda, d) {
        Ok(c) => println!("{}: {} = {} [{}]", c.identity, c.lhs, c.rhs, c.pass),
        Err(e) => println!("SSYT_SYT: not applicable ({e})"),
    }
    let c = check_branching(&lambda, d)?;
    println!("{}: {} = {} [{}]", c.identity, c.lhs, c.rhs, c.pass);
    Ok(())
}
