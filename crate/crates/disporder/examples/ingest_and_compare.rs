//! Ingest raw count data from CSV, round-trip through JSON, and compare.
//!
//! The on-disk formats are deliberately small:
//!
//!   * CSV with a `value,count` header carries raw tallies; zero-count rows
//!     are legal and dropped, counts are normalized into exact rational
//!     probabilities, and the total tally is remembered so sample-corrected
//!     measures stay available.
//!   * JSON carries a finished distribution: label, `[value, probability]`
//!     atom pairs (rationals as `"num/den"` strings), and optional sample
//!     size and tail-defect fields.
//!
//! The example writes a small CSV, ingests it, serializes the result to
//! JSON, reads it back, checks the round trip preserves the law exactly,
//! and finishes with a measure-and-order comparison against a second sample
//! — the same pipeline as `disporder ingest` / `disporder compare`.
//!
//! Run with:
//!
//! ```bash
//! cargo run --example ingest_and_compare
//! ```

use disporder::io::{dist_from_csv, dist_from_json, dist_to_json};
use disporder::measures::{evaluate, MeasureOpts, MeasureSpec};
use disporder::orders::OrderKind;
use disporder::scalar::Tol;

const GROUP_1: &str = "\
value,count
0,11
1,7
2,4
3,2
5,0
";

const GROUP_2: &str = "\
value,count
0,14
1,8
2,6
3,3
4,2
6,1
";

fn main() {
    let tol = Tol::default();

    // CSV -> distribution. Counts become exact rationals over the total.
    let f = dist_from_csv("group-1", GROUP_1, tol).expect("well-formed csv");
    let g = dist_from_csv("group-2", GROUP_2, tol).expect("well-formed csv");
    println!(
        "{}: {} atoms, sample size {:?}",
        f.label(),
        f.n(),
        f.sample_size()
    );
    println!(
        "{}: {} atoms, sample size {:?}",
        g.label(),
        g.n(),
        g.sample_size()
    );

    // Distribution -> JSON -> distribution is lossless.
    let json = dist_to_json(&f);
    println!("\nJSON form of {}:\n{json}", f.label());
    let back = dist_from_json(&json, tol).expect("own output parses");
    assert!(back.same_law(&f, tol), "round trip must preserve the law");
    assert_eq!(back.sample_size(), f.sample_size());
    println!("round trip preserves the law and the sample size");

    // The same comparison the CLI performs.
    println!("\nmeasures (sample-corrected):");
    let opts = MeasureOpts {
        sample_corrected: true,
        ..MeasureOpts::default()
    };
    for token in ["sd", "gmd", "mad", "mdmad", "iqnr", "ienr"] {
        let spec = MeasureSpec::parse(token).expect("valid token");
        let tf = evaluate(&f, &spec, &opts).expect("measure");
        let tg = evaluate(&g, &spec, &opts).expect("measure");
        println!(
            "  {:<16} {:>10.6} vs {:>10.6}",
            spec.name(),
            tf.to_f64(),
            tg.to_f64()
        );
    }

    println!("\norders, read as: group-1 \u{2aaf} group-2?");
    for kind in OrderKind::ALL {
        let v = kind.decide(&f, &g, tol);
        match &v.witness {
            Some(w) => println!("  {:<5} fails  ({w})", kind.name()),
            None => println!(
                "  {:<5} {}",
                kind.name(),
                if v.holds { "holds" } else { "fails" }
            ),
        }
    }
}
