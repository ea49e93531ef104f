#pragma once

#include <string>
#include <string_view>

namespace httplib {
class Server;
}

namespace idealrank::service {

struct Response {
    int status = 200;
    std::string body;
    std::string content_type = "application/json";
};

// POST /api/v1/rank. Body: a problem document plus optional
// "options": {"ideal_mode", "distance", "auto_normalize_weights"} and
// "include_intermediates": bool.
Response handle_rank(std::string_view body);

// POST /api/v1/sweep. Body: a problem document plus "criterion", "steps"
// and optional "options".
Response handle_sweep(std::string_view body);

// GET /api/v1/health
Response handle_health();

// Registers the three endpoints, 405 for wrong methods, and permissive CORS.
void register_routes(httplib::Server& server);

// Blocks until the server stops. Returns false if the socket could not be bound.
bool serve(const std::string& host, int port);

}  // namespace idealrank::service
