//! Bernoulli numbers and the even zeta and lambda values as rational multiples of powers of π.

use eisenstein::scalars::{bernoulli, check_scalar_recursion, lambda_even, zeta_even, ScalarKind};

fn main() {
    for n in (0..=12).filter(|n| *n < 2 || n % 2 == 0) {
        println!("B_{n:<2} = {}", bernoulli(n));
    }
    for k in 1..=6 {
        println!(
            "zeta({:>2}) = {:<24} lambda({:>2}) = {}",
            2 * k,
            zeta_even(k),
            2 * k,
            lambda_even(k)
        );
    }
    let ok = (2..=20).all(|m| {
        check_scalar_recursion(ScalarKind::Zeta, m) && check_scalar_recursion(ScalarKind::Lambda, m)
    });
    println!("convolution recursions for m <= 20: {ok}");
}
