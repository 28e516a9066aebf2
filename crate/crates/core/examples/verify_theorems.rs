//! Exhaustive verification: the main theorem and the surrounding identities
//! as machine-readable reports. Pass a size bound as the first argument.

use gendelta::verify::{all_passed, to_csv, Verifier};

fn main() {
    let max: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let v = Verifier::new(max);

    let main = v.verify_main_theorem(max);
    print!("{}", to_csv(&main[..main.len().min(6)], false));
    println!("main theorem: {} checks, all pass: {}", main.len(), all_passed(&main));

    let rec = v.recursions(max.min(5), 2);
    println!("skewing recursions: {} checks, all pass: {}", rec.len(), all_passed(&rec));
    let eq = v.equidistribution(max);
    println!("equidistribution: {} checks, all pass: {}", eq.len(), all_passed(&eq));
    let open = v.open_problem_identity(max);
    println!("q^m OPd^R = OPd^L: {} checks, all pass: {}", open.len(), all_passed(&open));
}
