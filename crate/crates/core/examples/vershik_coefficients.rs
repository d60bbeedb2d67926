//! Q_j(m, n) on a sequence of positive rationals, with the recursion,
//! normalization and moment identities evaluated exactly.
//!
//! ```bash
//! cargo run -p hookcontent --example vershik_coefficients -- 1,2/3,3,4
//! ```

use num_traits::Zero;

use hookcontent::vershik::{
    all_pairs, all_triples, identity1_lhs, identity2_sides, normalization_residual, q_coefficient,
    recursion_residual, PairSequence,
};

fn main() -> Result<(), hookcontent::Error> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "1,2,3,4".into());
    let a: PairSequence = text.parse()?;
    let s = a.s();
    println!("a = ({a}), s = {s}");

    for j in 0..=s {
        let t = hookcontent::IndexTriple::new(0, j, s);
        println!("  Q_{j}(0,{s}) = {}", q_coefficient(&a, t)?);
    }

    let mut nonzero = 0;
    for t in all_triples(s) {
        if !recursion_residual(&a, t)?.is_zero() {
            nonzero += 1;
        }
    }
    println!(
        "recursion residuals: {} triples, {nonzero} nonzero",
        all_triples(s).count()
    );

    for (m, n) in all_pairs(s) {
        let (lhs, rhs) = identity2_sides(&a, m, n)?;
        println!(
            "  (m,n)=({m},{n}): ΣQ-1 = {}, first moment = {}, second moment = {lhs} vs {rhs}",
            normalization_residual(&a, m, n)?,
            identity1_lhs(&a, m, n)?,
        );
    }
    Ok(())
}
