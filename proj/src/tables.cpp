#include "orbits/tables.hpp"

namespace orbits {

// Reference parameter sets and printed d1/d2 (or d3) values. Angles are kept
// as rational multiples of pi so nothing drifts through a decimal round-trip.
const std::vector<TableRow>& reference_rows() {
    static const std::vector<TableRow> rows = {
    {1, 0.13, 0.49, 1, 20, 0.29, 0.42, 0.29, 5.419669, 5.417862},
    {1, 0.15, 0.49, 1, 20, 0.29, 0.41, 0.30, 5.417626, 5.416591},
    {1, 0.15, 0.49, 1, 20, 0.29, 0.42, 0.29, 5.419669, 5.413794},
    {1, 0.15, 0.49, 1, 20, 0.30, 0.35, 0.35, 5.441499, 5.436767},
    {1, 0.15, 0.51, 1, 20, 0.30, 0.36, 0.34, 5.441669, 5.437985},
    {1, 0.15, 0.51, 1, 20, 0.30, 0.37, 0.33, 5.442180, 5.433615},
    {1, 0.15, 0.51, 1, 20, 0.30, 0.38, 0.32, 5.443031, 5.429587},
    {1, 0.15, 0.51, 1, 20, 0.30, 0.39, 0.31, 5.444223, 5.425898},
    {1, 0.15, 0.51, 1, 20, 0.30, 0.40, 0.30, 5.445755, 5.422550},
    {1, 0.15, 0.53, 1, 20, 0.31, 0.35, 0.34, 5.470820, 5.467576},
    {1, 0.15, 0.53, 1, 20, 0.31, 0.36, 0.33, 5.471160, 5.462971},
    {1, 0.15, 0.53, 1, 20, 0.31, 0.37, 0.32, 5.471841, 5.458707},
    {1, 0.15, 0.53, 1, 20, 0.31, 0.38, 0.31, 5.472863, 5.454784},
    {1, 0.17, 0.45, 1, 20, 0.32, 0.32, 0.36, 5.500992, 5.488608},
    {1, 0.17, 0.47, 1, 20, 0.32, 0.33, 0.35, 5.500481, 5.454518},
    {1, 0.17, 0.47, 1, 20, 0.32, 0.34, 0.34, 5.500311, 5.449987},
    {1, 0.17, 0.47, 1, 20, 0.33, 0.34, 0.33, 5.530142, 5.444254},
    {1, 0.45, 0.15, 1, 1, 0.33, 0.31, 0.36, 5.471160, 5.456006},
    {1, 0.45, 0.15, 1, 1, 0.33, 0.32, 0.35, 5.500481, 5.455325},
    {1, 0.45, 0.15, 1, 1, 0.33, 0.33, 0.34, 5.530142, 5.454984},
    {1, 0.47, 0.13, 1, 1, 0.34, 0.30, 0.36, 5.441669, 5.439671},
    {1, 0.47, 0.13, 1, 1, 0.34, 0.31, 0.35, 5.470820, 5.438820},
    {1, 0.47, 0.13, 1, 1, 0.34, 0.32, 0.34, 5.500311, 5.438309},
    {1, 0.47, 0.15, 1, 1, 0.35, 0.30, 0.35, 5.441499, 5.417900},
    {1, 0.49, 0.15, 1, 1, 0.36, 0.29, 0.35, 5.412519, 5.411552},
    {1, 0.49, 0.15, 1, 1, 0.36, 0.32, 0.32, 5.500992, 5.410020},
    {1, 0.49, 0.15, 1, 1, 0.37, 0.29, 0.34, 5.412859, 5.411962},
    {1, 0.49, 0.15, 1, 1, 0.37, 0.30, 0.33, 5.442180, 5.411281},
    {1, 0.49, 0.15, 1, 1, 0.37, 0.31, 0.32, 5.471841, 5.410940},
    {1, 0.49, 0.15, 1, 1, 0.38, 0.29, 0.33, 5.413540, 5.412712},
    {1, 0.49, 0.15, 1, 1, 0.38, 0.30, 0.32, 5.443031, 5.412201},
    {1, 0.49, 0.15, 1, 1, 0.38, 0.31, 0.31, 5.472863, 5.412031},
    {1, 0.49, 0.15, 1, 1, 0.39, 0.29, 0.32, 5.414562, 5.413803},
    {1, 0.49, 0.15, 1, 1, 0.39, 0.30, 0.31, 5.444223, 5.413462},
    {1, 0.49, 0.17, 1, 1, 0.40, 0.29, 0.31, 5.415924, 5.415807},
    {1, 0.49, 0.17, 1, 1, 0.40, 0.30, 0.30, 5.445755, 5.415637},
    {1, 0.49, 0.17, 1, 1, 0.41, 0.30, 0.29, 5.417626, 5.416078},
    {1, 0.49, 0.17, 1, 1, 0.42, 0.29, 0.29, 5.419669, 5.416689},
    {2, 0.15, 0.67, 1, 30, 1.00, 1.00, 1.00, 11.523843, 11.505860},
    {2, 0.15, 0.67, 1, 30, 1.00, 1.00, 1.00, 11.523843, 11.505860},
    {2, 0.15, 0.69, 1, 30, 1.00, 1.00, 1.00, 11.523843, 11.444212},
    {2, 0.17, 0.65, 1, 30, 1.00, 1.00, 1.00, 11.523843, 11.493238},
    {2, 0.17, 0.67, 1, 20, 1.00, 1.00, 1.00, 11.523843, 11.452135},
    {2, 0.17, 0.69, 1, 20, 1.00, 1.00, 1.00, 11.523843, 11.400124},
    {2, 0.19, 0.63, 1, 30, 1.00, 1.00, 1.00, 11.523843, 11.519350},
    {2, 0.19, 0.65, 1, 20, 1.00, 1.00, 1.00, 11.523843, 11.455969},
    {2, 0.19, 0.67, 1, 20, 1.00, 1.00, 1.00, 11.523843, 11.386608},
    {2, 0.19, 0.69, 1, 20, 1.00, 1.00, 1.00, 11.523843, 11.344747},
    {2, 0.61, 0.23, 1, 1, 1.00, 1.00, 1.00, 11.523843, 11.516685},
    {2, 0.63, 0.19, 1, 1, 1.00, 1.00, 1.00, 11.523843, 11.489791},
    {2, 0.63, 0.21, 1, 1, 1.00, 1.00, 1.00, 11.523843, 11.436105},
    {2, 0.65, 0.17, 1, 1, 1.00, 1.00, 1.00, 11.523843, 11.461786},
    {2, 0.65, 0.19, 1, 1, 1.00, 1.00, 1.00, 11.523843, 11.392115},
    {2, 0.65, 0.21, 1, 1, 1.00, 1.00, 1.00, 11.523843, 11.349366},
    {2, 0.67, 0.15, 1, 1, 1.00, 1.00, 1.00, 11.523843, 11.472422},
    {2, 0.67, 0.17, 1, 1, 1.00, 1.00, 1.00, 11.523843, 11.383978},
    {2, 0.67, 0.19, 1, 1, 1.00, 1.00, 1.00, 11.523843, 11.324970},
    {2, 0.67, 0.21, 1, 1, 1.00, 1.00, 1.00, 11.523843, 11.291915},
    {2, 0.69, 0.13, 1, 1, 1.00, 1.00, 1.00, 11.523843, 11.522980},
    {2, 0.69, 0.15, 1, 1, 1.00, 1.00, 1.00, 11.523843, 11.412094},
    {2, 0.69, 0.17, 1, 1, 1.00, 1.00, 1.00, 11.523843, 11.334189},
    {2, 0.69, 0.19, 1, 1, 1.00, 1.00, 1.00, 11.523843, 11.284714},
    {3, 0.17, 0.0, 1, 2, 0.10, 0.75, 0.15, 5.062791, 5.060773},
    {3, 0.17, 0.0, 1, 2, 0.10, 0.77, 0.13, 5.083903, 5.071551},
    {3, 0.17, 0.0, 1, 2, 0.10, 0.78, 0.12, 5.094969, 5.077450},
    {3, 0.17, 0.0, 1, 2, 0.10, 0.80, 0.10, 5.118123, 5.090270},
    {3, 0.17, 0.0, 1, 2, 0.15, 0.53, 0.32, 5.051742, 5.050040},
    {3, 0.17, 0.0, 1, 2, 0.15, 0.57, 0.28, 5.068768, 5.046398},
    {3, 0.17, 0.0, 1, 2, 0.15, 0.60, 0.25, 5.085112, 5.047242},
    {3, 0.17, 0.0, 1, 2, 0.15, 0.65, 0.20, 5.119162, 5.055458},
    {3, 0.17, 0.0, 1, 2, 0.15, 0.70, 0.15, 5.161725, 5.072186},
    {3, 0.17, 0.0, 1, 2, 0.15, 0.72, 0.13, 5.121130, 5.081261},
    {3, 0.17, 0.0, 1, 2, 0.20, 0.31, 0.49, 5.176554, 5.175168},
    {3, 0.17, 0.0, 1, 2, 0.20, 0.35, 0.45, 5.167020, 5.144967},
    {3, 0.17, 0.0, 1, 2, 0.20, 0.40, 0.40, 5.162763, 5.114876},
    {3, 0.17, 0.0, 1, 2, 0.20, 0.50, 0.30, 5.179789, 5.080232},
    {3, 0.17, 0.0, 1, 2, 0.20, 0.55, 0.25, 5.201070, 5.075680},
    {3, 0.17, 0.0, 1, 2, 0.20, 0.60, 0.20, 5.230864, 5.079639},
    {3, 0.19, 0.0, 1, 2, 0.25, 0.22, 0.53, 5.249837, 5.237465},
    {3, 0.19, 0.0, 1, 2, 0.25, 0.25, 0.50, 5.325541, 5.202291},
    {3, 0.19, 0.0, 1, 2, 0.25, 0.30, 0.45, 5.308516, 5.150479},
    {3, 0.19, 0.0, 1, 2, 0.25, 0.35, 0.40, 5.300003, 5.107178},
    {3, 0.19, 0.0, 1, 2, 0.25, 0.62, 0.13, 5.041112, 5.020454},
    {3, 0.19, 0.0, 1, 2, 0.30, 0.22, 0.48, 5.230258, 5.222385},
    {3, 0.19, 0.0, 1, 2, 0.30, 0.25, 0.45, 5.308516, 5.189765},
    {3, 0.19, 0.0, 1, 2, 0.30, 0.30, 0.40, 5.445755, 5.142208},
    {3, 0.19, 0.0, 1, 2, 0.30, 0.35, 0.35, 5.441499, 5.103164},
    {3, 0.19, 0.0, 1, 2, 0.30, 0.56, 0.14, 5.036553, 5.032137},
    {3, 0.21, 0.0, 1, 2, 0.35, 0.21, 0.44, 5.192935, 5.184596},
    {3, 0.21, 0.0, 1, 2, 0.35, 0.29, 0.36, 5.412519, 5.092092},
    {3, 0.21, 0.0, 1, 2, 0.35, 0.39, 0.26, 5.327621, 5.007107},
    {3, 0.21, 0.0, 1, 2, 0.35, 0.48, 0.17, 5.091316, 4.959734},
    {3, 0.21, 0.0, 1, 2, 0.35, 0.53, 0.12, 4.971952, 4.945333},
    {3, 0.21, 0.0, 1, 3, 0.40, 0.28, 0.32, 5.386433, 5.342981},
    {3, 0.21, 0.0, 1, 3, 0.40, 0.32, 0.28, 5.386433, 5.287294},
    {3, 0.21, 0.0, 1, 3, 0.40, 0.36, 0.24, 5.271874, 5.237055},
    {3, 0.21, 0.0, 1, 3, 0.40, 0.38, 0.22, 5.216638, 5.213978},
    {3, 0.23, 0.0, 1, 2, 0.45, 0.19, 0.36, 5.139742, 5.127834},
    {3, 0.23, 0.0, 1, 2, 0.45, 0.29, 0.26, 5.337836, 5.003006},
    {3, 0.23, 0.0, 1, 2, 0.45, 0.37, 0.18, 5.112805, 4.927660},
    {3, 0.23, 0.0, 1, 2, 0.45, 0.46, 0.09, 4.885693, 4.868944},
    {3, 0.23, 0.0, 1, 2, 0.50, 0.18, 0.32, 5.123871, 5.108878},
    {3, 0.23, 0.0, 1, 2, 0.50, 0.23, 0.27, 5.266218, 5.044762},
    {3, 0.23, 0.0, 1, 2, 0.50, 0.29, 0.21, 5.208258, 4.979058},
    {3, 0.23, 0.0, 1, 2, 0.50, 0.37, 0.13, 4.990036, 4.910522},
    {3, 0.23, 0.0, 1, 2, 0.50, 0.41, 0.09, 4.889098, 4.884426},
    {4, 0.21, 0.0, 1, 2, 1.00, 1.00, 1.00, 11.523843, 11.327950},
    {4, 0.23, 0.0, 1, 2, 1.00, 1.00, 1.00, 11.523843, 11.036769},
    {4, 0.23, 0.0, 1, 3, 1.00, 1.00, 1.00, 11.523843, 11.336568},
    {4, 0.25, 0.0, 1, 2, 1.00, 1.00, 1.00, 11.523843, 10.821272},
    {4, 0.25, 0.0, 1, 3, 1.00, 1.00, 1.00, 11.523843, 11.187475},
    {4, 0.25, 0.0, 1, 4, 1.00, 1.00, 1.00, 11.523843, 11.453195},
    {4, 0.27, 0.0, 1, 2, 1.00, 1.00, 1.00, 11.523843, 10.667031},
    {4, 0.27, 0.0, 1, 3, 1.00, 1.00, 1.00, 11.523843, 11.107374},
    {4, 0.27, 0.0, 1, 4, 1.00, 1.00, 1.00, 11.523843, 11.411685},
    {4, 0.29, 0.0, 1, 2, 1.00, 1.00, 1.00, 11.523843, 10.563849},
    {4, 0.29, 0.0, 1, 3, 1.00, 1.00, 1.00, 11.523843, 11.085761},
    {4, 0.29, 0.0, 1, 4, 1.00, 1.00, 1.00, 11.523843, 11.430090},
    {4, 0.31, 0.0, 1, 2, 1.00, 1.00, 1.00, 11.523843, 10.504424},
    {4, 0.31, 0.0, 1, 3, 1.00, 1.00, 1.00, 11.523843, 11.114860},
    {4, 0.31, 0.0, 1, 4, 1.00, 1.00, 1.00, 11.523843, 11.500414},
    {4, 0.33, 0.0, 1, 2, 1.00, 1.00, 1.00, 11.523843, 10.483477},
    {4, 0.33, 0.0, 1, 3, 1.00, 1.00, 1.00, 11.523843, 11.188786},
    {4, 0.35, 0.0, 1, 2, 1.00, 1.00, 1.00, 11.523843, 10.497161},
    {4, 0.35, 0.0, 1, 3, 1.00, 1.00, 1.00, 11.523843, 11.302997},
    {4, 0.37, 0.0, 1, 2, 1.00, 1.00, 1.00, 11.523843, 10.542652},
    {4, 0.37, 0.0, 1, 3, 1.00, 1.00, 1.00, 11.523843, 11.453926},
    {4, 0.39, 0.0, 1, 2, 1.00, 1.00, 1.00, 11.523843, 10.617860},
    };
    return rows;
}

std::vector<TableRow> reference_rows(int table_id) {
    std::vector<TableRow> out;
    for (const TableRow& row : reference_rows())
        if (row.table == table_id) out.push_back(row);
    return out;
}

}  // namespace orbits
