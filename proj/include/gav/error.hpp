// SPDX-License-Identifier: Apache-2.0
#pragma once
#include <stdexcept>
#include <string>

namespace gav {

// Error categories map onto CLI exit codes: config=2, data=3, numeric=4.
// InvalidInput/Contract are programming or caller errors and map to 4.
enum class ErrorKind { Config, Data, Numeric, InvalidInput, Contract };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }
    int exit_code() const {
        switch (kind_) {
        case ErrorKind::Config: return 2;
        case ErrorKind::Data: return 3;
        default: return 4;
        }
    }

private:
    ErrorKind kind_;
};

inline void check_input(bool cond, const std::string& msg) {
    if (!cond) throw Error(ErrorKind::InvalidInput, msg);
}
inline void check_contract(bool cond, const std::string& msg) {
    if (!cond) throw Error(ErrorKind::Contract, msg);
}
inline void check_data(bool cond, const std::string& msg) {
    if (!cond) throw Error(ErrorKind::Data, msg);
}
inline void check_config(bool cond, const std::string& msg) {
    if (!cond) throw Error(ErrorKind::Config, msg);
}

}  // namespace gav
