#pragma once

#include <json.hpp>

#include "daha/report.hpp"
#include "daha/rep_z.hpp"
#include "daha/symmetric.hpp"

namespace daha {

using ordered_json = nlohmann::ordered_json;

// {"a": ["1/2", "0", ...], "b": [...]}
ordered_json scalar_to_json(const CycScalar& x);
CycScalar scalar_from_json(int p, const ordered_json& j);

// {"p": 3, "conductor": 12, "min_poly": [1,0,-1,0,1]}
ordered_json ring_header(int p);

// {"p", "basis": ["w1",...], "rows": [[scalar,...],...]}
ordered_json operator_to_json(const RepZ& rep, const ZOperator& A,
                              int float_digits = 0);
ordered_json vector_to_json(const RepZ& rep, const ZVector& v,
                            int float_digits = 0);
// {"p", "labels": [...], "vectors": [[scalar,...],...]}  (Z coordinates)
ordered_json labeled_vectors_to_json(const RepZ& rep,
                                     const std::vector<std::string>& labels,
                                     const std::vector<ZVector>& vectors,
                                     int float_digits = 0);
// {"p", "basis": ["chi+1",...], "N": [[[scalar,...],...],...], "integral": bool}
ordered_json fusion_to_json(const FusionTensor& t, int float_digits = 0);

ordered_json report_to_json(const CheckReport& r);
ordered_json suite_to_json(const CheckSuite& s);

// CSV with complex-embedded entries, for human inspection
std::string operator_to_csv(const RepZ& rep, const ZOperator& A, int digits);
std::string vector_to_csv(const RepZ& rep, const ZVector& v, int digits);
std::string labeled_vectors_to_csv(const RepZ& rep,
                                   const std::vector<std::string>& labels,
                                   const std::vector<ZVector>& vectors, int digits);
std::string fusion_to_csv(const FusionTensor& t, int digits);

}  // namespace daha
