//! Writes an SVG diagram of B(7,4) with the minimal unknotting crossing data
//! highlighted.

use std::collections::BTreeSet;

use unknot::braid::BraidWord;
use unknot::render::render_braid_svg;
use unknot::toric::minimal_ucd;

fn main() {
    let word = BraidWord::toric(7, 4).unwrap();
    let highlight: BTreeSet<usize> =
        minimal_ucd(7, 4).unwrap().positions.as_slice().iter().copied().collect();
    let svg = render_braid_svg(&word, &highlight);
    let path = "braid_7_4.svg";
    std::fs::write(path, &svg).unwrap();
    println!("wrote {path} ({} bytes, {} highlighted crossings)", svg.len(), highlight.len());
}
