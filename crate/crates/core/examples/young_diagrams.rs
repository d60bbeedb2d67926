//! Hook lengths, contents, step coordinates and addable corners of a shape.
//!
//! ```bash
//! cargo run -p hookcontent --example young_diagrams -- 8,8,4,4,1,1,1
//! ```

use hookcontent::partitions::{corner_content_via_steps, parse_partition};

fn main() -> Result<(), hookcontent::Error> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "4,3,1".into());
    let lambda = parse_partition(&text)?;

    println!("λ = ({lambda}), n = {}", lambda.size());
    println!("grouped (value, multiplicity): {:?}", lambda.grouped());
    println!("hook lengths:");
    for row in lambda.hook_grid() {
        println!("  {row:?}");
    }
    println!("contents:");
    for row in lambda.content_grid() {
        println!("  {row:?}");
    }

    let sc = lambda.step_coordinates()?;
    println!("step coordinates: {sc}");
    for corner in lambda.addable_corners() {
        println!(
            "  λ^({}) adds {} (content {}, from steps {}) -> ({})",
            corner.index,
            corner.cell,
            corner.cell.content(),
            corner_content_via_steps(&sc, corner.index)?,
            corner.result
        );
    }
    Ok(())
}
