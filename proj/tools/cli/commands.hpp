#pragma once

#include <ostream>
#include <string_view>

#include "cli/config.hpp"

namespace opuc::cli {

// Column headers, byte-exact.
inline constexpr std::string_view kIdentitiesHeader = "identity,max_n,status";
inline constexpr std::string_view kEvalHeader =
    "n,re_z,im_z,re_phi,im_phi,re_phistar,im_phistar,re_Phi,im_Phi,re_Phistar,im_Phistar";
inline constexpr std::string_view kUniversalityHeader = "n,re_a,im_a,re_b,im_b,re_emp,im_emp,re_lim,im_lim,abs_err";
inline constexpr std::string_view kAsymptoticsHeader = "n,schur_err,ratio_err,edge_scaled,edge_const,edge_rel_err";
inline constexpr std::string_view kKernelHeader = "n,re_z,im_z,re_w,im_w,re_sum,im_sum,re_cd,im_cd,rel_err";

// Each returns the process exit code. Data goes to `out`; progress notes and
// summaries go to `log`.
int cmd_identities(const RunConfig& config, std::ostream& out, std::ostream& log);
int cmd_eval(const RunConfig& config, std::ostream& out, std::ostream& log);
int cmd_universality(const RunConfig& config, std::ostream& out, std::ostream& log);
int cmd_asymptotics(const RunConfig& config, std::ostream& out, std::ostream& log);
int cmd_kernel(const RunConfig& config, std::ostream& out, std::ostream& log);

// Dispatches on config.command after finalize().
int run(const RunConfig& config, std::ostream& out, std::ostream& log);

}  // namespace opuc::cli
