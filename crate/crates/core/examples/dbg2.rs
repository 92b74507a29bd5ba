fn main() {
    eprintln!("start");
    let f = algint::poly::parse_pretty("x^2 - x + 2").unwrap();
    eprintln!("parsed {:?}", f);
}
