#pragma once

#include <cmath>
#include <vector>

namespace orbits {

// One reference row: test-loop parameters, masses, and the printed d1 and
// d2/d3 values. Tables 1 and 2 are elliptic (b used); 3 and 4 circular.
struct TableRow {
    int table = 0;
    double a = 0.0;
    double b = 0.0;           // 0 for the circular tables
    int theta_num = 1;        // theta = theta_num * pi / theta_den
    int theta_den = 1;
    double m1 = 0.0, m2 = 0.0, m3 = 0.0;
    double d1_ref = 0.0;
    double d_ref = 0.0;       // d2 for tables 1-2, d3 for tables 3-4

    bool elliptic() const { return table <= 2; }
    double theta() const { return theta_num * M_PI / theta_den; }
};

const std::vector<TableRow>& reference_rows();
std::vector<TableRow> reference_rows(int table_id);

}  // namespace orbits
