#ifndef ALE_CLIAPP_HPP
#define ALE_CLIAPP_HPP

namespace ale {

inline constexpr const char* kVersion = "0.1.0";

// Exit codes: 0 ok, 1 schema violation, 2 numerical rejection, 3 internal.
int run_cli(int argc, const char* const* argv);

}  // namespace ale

#endif
