//! Evaluate a deformed entropy on a correlated table and verify its chain
//! rule closes. Run with `cargo run -p qentropy --example chain_residual`.

use qentropy::chain::{chain_residual, Rule};
use qentropy::{entropy, Axis, EntropySpec, JointTable};

fn main() {
    let spec = EntropySpec::tsallis(2.0).unwrap();
    let joint = JointTable::new(vec![vec![0.5, 0.1], vec![0.1, 0.3]]).unwrap();

    let h = entropy(&spec, &joint.flatten()).unwrap();
    let rule = Rule::QExtensiveChain { q: spec.extensivity_q() };
    let residual = chain_residual(&spec, &joint, rule, Axis::Y).unwrap();
    assert!(residual.abs() < 1e-12); // the deformed chain rule closes
    println!("H = {h:.6}, chain residual = {residual:.2e}");
}
