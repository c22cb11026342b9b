// Walks through the library surface on the weight-14 running example:
// enumeration, the parity-class census, the bijections, and one identity.

#include <iostream>

#include "twosize/twosize.hpp"

int main() {
    using namespace twosize;

    std::cout << "partitions of 14 into exactly two part sizes: "
              << count_k_sizes(14, 2) << "\n";
    std::cout << "closed form gives " << nu2_closed_form(14)
              << ", series coefficient " << nu_k_series(2, 14).back() << "\n\n";

    std::cout << "marked parity-class census of 14:\n";
    for (const auto& [cls, count] : class_census(14))
        std::cout << "  " << cls.to_string() << "  " << count << "\n";

    const TwoSizePartition p{6, 1, 1, 8};
    std::cout << "\np = " << format_partition(p) << " lies in "
              << classify(p).to_string() << "\n";
    std::cout << "conj(p)    = " << format_partition(conjugate(p)) << "\n";
    std::cout << "phibar(p)  = " << format_partition(phi_bar(p)) << "\n";
    std::cout << "crc(p)     = " << format_partition(conj_rho_conj(p)) << "\n";
    std::cout << "rho(4^6 3^2) = "
              << format_partition(rho(to_two_size(parse_partition("4^6 3^2"))))
              << "\n\n";

    const IdentityReport report = verify_identity("main", 14);
    std::cout << to_csv_row(report) << "\n";
    return report.holds ? 0 : 1;
}
