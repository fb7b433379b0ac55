#include "fixsing/common.hpp"

#include <iostream>
#include <mutex>

namespace fixsing {
namespace {

std::mutex sink_mutex;

void to_stderr(std::string_view msg) { std::cerr << "warning: " << msg << '\n'; }

WarningSink& sink()
{
    static WarningSink s = to_stderr;
    return s;
}

}  // namespace

void set_warning_sink(WarningSink s)
{
    std::lock_guard lock(sink_mutex);
    sink() = s ? std::move(s) : WarningSink(to_stderr);
}

void warn(std::string_view message)
{
    std::lock_guard lock(sink_mutex);
    sink()(message);
}

}  // namespace fixsing
