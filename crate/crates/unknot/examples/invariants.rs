//! Exact Alexander and Jones polynomials of braid closures.

use unknot::braid::BraidWord;
use unknot::invariants::{alexander_of_closure, jones_of_closure, kauffman_bracket, unlink_jones};

fn main() {
    let budget = 24;
    let show = |name: &str, word: &BraidWord| {
        println!("{name}: {word} on {} strands", word.strands());
        println!("  alexander: {}", alexander_of_closure(word).render("t", false));
        match jones_of_closure(word, budget) {
            Ok(j) => println!("  jones:     {}", j.render("t", true)),
            Err(e) => println!("  jones:     {e}"),
        }
        match kauffman_bracket(word, budget) {
            Ok(b) => println!("  bracket:   {}", b.render("A", false)),
            Err(e) => println!("  bracket:   {e}"),
        }
        println!();
    };

    show("unknot (one kink)", &BraidWord::from_ints(2, &[1]).unwrap());
    show("trefoil", &BraidWord::from_ints(2, &[1, 1, 1]).unwrap());
    show("figure eight", &BraidWord::from_ints(3, &[1, -2, 1, -2]).unwrap());
    show("hopf link", &BraidWord::from_ints(2, &[1, 1]).unwrap());
    show("B(3,4)", &BraidWord::toric(3, 4).unwrap());

    let flipped = BraidWord::toric(3, 4).unwrap().apply_crossing_changes(&[4, 5, 6]).unwrap();
    show("B(3,4) flipped at [4,5,6]", &flipped);

    let flipped64 = BraidWord::toric(6, 4)
        .unwrap()
        .apply_crossing_changes(&[6, 10, 14, 15, 16, 18, 19, 20])
        .unwrap();
    show("B(6,4) flipped at its minimal data", &flipped64);
    println!("2-unlink jones for comparison: {}", unlink_jones(2).render("t", true));
}
