// Regenerates the bundled least-primitive-modulus table for p in {2, 3, 5}
// and N up to 16.  Default: the data file format; --inc emits the C++ table
// included by the CLI.
#include <fstream>
#include <iostream>
#include <string>

#include "srmdp/field.hpp"
#include "srmdp/serialize.hpp"

int main(int argc, char** argv) {
    bool inc = false;
    std::string out = "-";
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--inc") {
            inc = true;
        } else if (arg == "--help" || arg == "-h") {
            std::cout << "usage: gen_primitive_table [--inc] [output-file]\n";
            return 0;
        } else {
            out = arg;
        }
    }

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (out != "-") {
        file.open(out);
        if (!file) {
            std::cerr << "error: cannot write " << out << "\n";
            return 1;
        }
        os = &file;
    }

    if (inc) {
        *os << "// Generated by gen_primitive_table --inc; least primitive modulus per (p, N),\n"
               "// coefficients low degree first.  Lookups that miss fall back to a fresh\n"
               "// search, so this table is a cache, not a correctness requirement.\n"
               "struct PrimEntry {\n"
               "    std::uint32_t p;\n"
               "    std::size_t N;\n"
               "    const char* coeffs;\n"
               "};\n"
               "constexpr PrimEntry kPrimitiveTable[] = {\n";
    } else {
        *os << "# least primitive modulus per (p, N); coefficients low degree first\n"
               "# p N coefficients\n";
    }

    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (std::size_t N = 1; N <= 16; ++N) {
            const auto poly = srmdp::find_primitive_poly(p, N);
            const std::string coeffs = srmdp::coeffs_to_string(poly);
            if (inc)
                *os << "    {" << p << ", " << N << ", \"" << coeffs << "\"},\n";
            else
                *os << p << " " << N << " " << coeffs << "\n";
        }
    }
    if (inc) *os << "};\n";
    return 0;
}
