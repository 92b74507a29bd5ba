fn main() {
    let f = algint::poly::parse_pretty("x^2 - x + 2").unwrap();
    eprintln!("isolating at 24 bits...");
    let w = algint::Rat::new(algint::Int::from(1), algint::Int::from(1u64 << 24));
    let rs = algint::roots::isolate_roots(&f, &w).unwrap();
    eprintln!("sum = {:?}", rs.abs_sq_sum());
    eprintln!("cmp vs 8...");
    let c = algint::Rat::from(algint::Int::from(8));
    let o = algint::realalg::cmp_sq_sum(&f, &c).unwrap();
    eprintln!("done: {:?}", o);
    let c4 = algint::Rat::from(algint::Int::from(4));
    eprintln!("cmp vs 4 = {:?}", algint::realalg::cmp_sq_sum(&f, &c4).unwrap());
    let g = algint::poly::parse_pretty("x^3 - 3").unwrap();
    eprintln!("cubic vs 6 = {:?}", algint::realalg::cmp_sq_sum(&g, &algint::Rat::from(algint::Int::from(6))).unwrap());
    let t = algint::rat::parse_rat("6243/1000").unwrap();
    eprintln!("cubic vs 6.243 = {:?}", algint::realalg::cmp_sq_sum(&g, &t).unwrap());
}
