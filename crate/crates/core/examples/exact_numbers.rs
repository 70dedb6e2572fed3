//! Exact arithmetic on constructible numbers.
//!
//! Run with `cargo run --example exact_numbers`.

use euclid_elements::{Constructible as Num, Result};

fn main() -> Result<()> {
    let two = Num::from_int(2);
    let three = Num::from_int(3);
    let r2 = two.sqrt_nonneg()?;
    let r3 = three.sqrt_nonneg()?;

    // (√2 + √3)² = 5 + 2√6, and nothing is rounded on the way
    let s = &r2 + &r3;
    println!("(√2 + √3)² = {}", s.square());
    println!("≈ {}", s.square().approx(30));

    // √(5 + 2√6) is found again inside the same field
    let back = s.square().sqrt_nonneg()?;
    println!("√(5 + 2√6) == √2 + √3: {}", back == s);
    println!("radical depth of √(5 + 2√6): {}", back.radical_depth());

    // a nested root that does not denest
    let nested = (&Num::one() + &r2).sqrt_nonneg()?;
    println!("√(1 + √2) = {} (depth {})", nested, nested.radical_depth());

    // equality is decided, never guessed from floats
    let tiny = &(&r2 * &r3) - &Num::from_int(6).sqrt_nonneg()?;
    println!("√2·√3 − √6 is zero: {}", tiny.is_zero());
    let close = &Num::ratio(99_999_999, 70_710_678) - &r2;
    println!("99999999/70710678 − √2 has sign {}", close.sign());
    Ok(())
}
