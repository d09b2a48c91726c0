#include "ohc/scan.hpp"

namespace ohc {

std::vector<ScanRow> threshold_scan(const ScanRequest& req) {
    (void)req;
    return {};
}

std::string scan_csv(const std::vector<ScanRow>& rows) {
    (void)rows;
    return "";
}

}  // namespace ohc
