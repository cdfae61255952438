//! Share two secrets over GF(13), multiply the shares pointwise and open the product.
//!
//! ```bash
//! cargo run --example genus0_scheme
//! ```

use arithss::scheme::{
    plan_scheme, reconstruct_product, recover_secret, share, star_product, verify_disconnected, verify_reconstruction,
};

fn main() {
    let params = plan_scheme(13, 8, 1, 2, 1).expect("parameters fit GF(13)").with_seed(2024);
    println!("n = {}, t = {}, d = {}, k = {}, T = {}", params.n, params.t, params.d, params.k, params.degree_cap);
    println!("t-disconnected: {}", verify_disconnected(&params));
    println!("(n - t)-reconstructing: {}", verify_reconstruction(&params, true));

    let mut rng = params.rng();
    let a = vec![params.field.from_int(5)];
    let b = vec![params.field.from_int(9)];
    let sa = share(&params, &a, &mut rng).unwrap();
    let sb = share(&params, &b, &mut rng).unwrap();
    let show =
        |v: &[arithss::field::FieldElement]| v.iter().map(|x| x.coefficients()[0].to_string()).collect::<Vec<_>>();
    println!("shares of 5: {:?}", show(&sa.shares));
    println!("shares of 9: {:?}", show(&sb.shares));

    let first_two: Vec<_> = sa.shares.iter().cloned().enumerate().take(params.degree_cap + 1).collect();
    println!("recovered from 2 shares: {:?}", show(&recover_secret(&params, &first_two).unwrap()));

    let product = star_product(&[sa, sb]).unwrap();
    // party 3 drops out
    let honest: Vec<_> = product.shares.iter().cloned().enumerate().filter(|(i, _)| *i != 3).collect();
    let opened = reconstruct_product(&params, &honest).unwrap();
    println!("5 * 9 mod 13 = {:?}", show(&opened));
}
