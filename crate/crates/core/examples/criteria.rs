//! Runs the signature engine on the three-generator example and prints each
//! discarded pair together with the syzygy that justifies it.
//!
//! ```text
//! cargo run -p sigbasis --example criteria
//! ```

use sigbasis::corpus::example_ideal;
use sigbasis::{certify_rejection, incremental_basis, EngineOptions};

fn main() -> Result<(), sigbasis::Error> {
    let (ring, gens) = example_ideal();
    let opts = EngineOptions {
        certify: true,
        trace: true,
        ..Default::default()
    };
    let run = incremental_basis(&ring, &gens, &opts)?;

    for (n, e) in run.state.elements().iter().enumerate() {
        println!(
            "r{} = ({}, {})",
            n + 1,
            e.sig.display(ring.vars()),
            ring.format(&e.poly)
        );
    }
    println!();
    for rej in &run.rejections {
        println!(
            "{}",
            certify_rejection(&ring, rej, &run.state)?.render(&ring)
        );
    }
    println!();
    for p in run.reduced_basis(&ring) {
        println!("{}", ring.format(&p));
    }
    Ok(())
}
