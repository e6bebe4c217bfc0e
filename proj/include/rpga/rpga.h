/* C interface to the rpga library.
 *
 * Objects are opaque handles created by *_parse / *_new / *_build calls and
 * released with the matching *_free. Calls return an rpga_status; on
 * failure the thread-local last error holds a message and a JSON form with
 * the error code and, for parse errors, the 1-based line and column.
 *
 * Strings returned through `char** out` are heap-allocated and owned by the
 * caller; release them with rpga_string_free. Bit strings are written MSB
 * first: "100" sets line 0. */
#ifndef RPGA_RPGA_H
#define RPGA_RPGA_H

#include <stddef.h>

#if defined(_WIN32)
#define RPGA_API __declspec(dllexport)
#else
#define RPGA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rpga_status {
  RPGA_OK = 0,
  RPGA_ERR_UNKNOWN_GATE,
  RPGA_ERR_GATE_TOO_WIDE,
  RPGA_ERR_INVALID_GATE,
  RPGA_ERR_WIDTH,
  RPGA_ERR_BAD_WIDTH,
  RPGA_ERR_PIN_OUT_OF_RANGE,
  RPGA_ERR_PIN_CLASH,
  RPGA_ERR_SLOT_CONFLICT,
  RPGA_ERR_NO_SUCH_PLACEMENT,
  RPGA_ERR_TOO_WIDE,
  RPGA_ERR_NO_OUTPUTS,
  RPGA_ERR_MALFORMED_TABLE,
  RPGA_ERR_NOT_SYMMETRIC,
  RPGA_ERR_CONFIG_MISMATCH,
  RPGA_ERR_NOT_CONFIGURED,
  RPGA_ERR_FORMAT,
  RPGA_ERR_INVALID_ARGUMENT, /* null handle or out-pointer, bad enum value */
  RPGA_ERR_INTERNAL
} rpga_status;

typedef enum rpga_format { RPGA_FORMAT_TEXT = 0, RPGA_FORMAT_JSON = 1 } rpga_format;

typedef enum rpga_circuit_syntax { RPGA_SYNTAX_RCIR = 0, RPGA_SYNTAX_REAL = 1 } rpga_circuit_syntax;

typedef enum rpga_session_mode {
  RPGA_MODE_INITIAL = 0,
  RPGA_MODE_CONFIGURED = 1,
  RPGA_MODE_USER = 2
} rpga_session_mode;

typedef struct rpga_circuit rpga_circuit;
typedef struct rpga_table rpga_table;
typedef struct rpga_report rpga_report;
typedef struct rpga_fabric rpga_fabric;
typedef struct rpga_config rpga_config;
typedef struct rpga_session rpga_session;
typedef struct rpga_server rpga_server;

RPGA_API const char* rpga_version(void);
RPGA_API const char* rpga_status_name(rpga_status status);
/* Nonzero for RPGA_ERR_FORMAT and RPGA_ERR_MALFORMED_TABLE. */
RPGA_API int rpga_status_is_parse_error(rpga_status status);
/* Valid until the next failing call on the same thread. */
RPGA_API const char* rpga_last_error_message(void);
RPGA_API const char* rpga_last_error_json(void);
RPGA_API void rpga_string_free(char* str);

/* Circuits */
RPGA_API rpga_status rpga_circuit_parse(const char* text, rpga_circuit_syntax syntax, rpga_circuit** out);
RPGA_API rpga_status rpga_circuit_new(size_t lines, rpga_circuit** out);
RPGA_API void rpga_circuit_free(rpga_circuit* circuit);
RPGA_API rpga_status rpga_circuit_place(rpga_circuit* circuit, size_t slot, const char* gate, const size_t* pins,
                                        size_t pin_count);
RPGA_API rpga_status rpga_circuit_set_constant(rpga_circuit* circuit, size_t line, int value);
RPGA_API rpga_status rpga_circuit_set_garbage(rpga_circuit* circuit, size_t line);
RPGA_API size_t rpga_circuit_width(const rpga_circuit* circuit);
RPGA_API rpga_status rpga_circuit_emit(const rpga_circuit* circuit, char** out);
/* Output bits of every line for one full input word. */
RPGA_API rpga_status rpga_circuit_eval(const rpga_circuit* circuit, const char* input, char** out);
/* Reversible table followed by the projected irreversible table. */
RPGA_API rpga_status rpga_circuit_truth_table(const rpga_circuit* circuit, rpga_format format, char** out);
RPGA_API rpga_status rpga_circuit_project(const rpga_circuit* circuit, rpga_table** out);
RPGA_API rpga_status rpga_circuit_metrics(const rpga_circuit* circuit, rpga_format format, char** out);
RPGA_API rpga_status rpga_circuit_check(const rpga_circuit* circuit, rpga_format format, int* bijective,
                                        char** out);

/* Irreversible truth tables */
RPGA_API rpga_status rpga_table_parse(const char* text, rpga_table** out);
RPGA_API void rpga_table_free(rpga_table* table);
RPGA_API rpga_status rpga_table_emit(const rpga_table* table, char** out);
RPGA_API rpga_status rpga_table_render(const rpga_table* table, rpga_format format, char** out);
RPGA_API size_t rpga_table_input_count(const rpga_table* table);
RPGA_API size_t rpga_table_output_count(const rpga_table* table);

/* Symmetry reports */
RPGA_API rpga_status rpga_analyze(const rpga_table* table, rpga_report** out);
RPGA_API rpga_status rpga_report_parse(const char* json, rpga_report** out);
RPGA_API void rpga_report_free(rpga_report* report);
RPGA_API rpga_status rpga_report_render(const rpga_report* report, rpga_format format, char** out);
RPGA_API int rpga_report_all_symmetric(const rpga_report* report);

/* Fabrics and configurations */
RPGA_API rpga_status rpga_fabric_build(size_t n, const char* realization, rpga_fabric** out);
/* Reads the fabric part of a fabric or configuration document. */
RPGA_API rpga_status rpga_fabric_parse(const char* doc, rpga_fabric** out);
RPGA_API void rpga_fabric_free(rpga_fabric* fabric);
RPGA_API rpga_status rpga_fabric_emit(const rpga_fabric* fabric, char** out);
RPGA_API size_t rpga_fabric_input_count(const rpga_fabric* fabric);

RPGA_API rpga_status rpga_configure(const rpga_fabric* fabric, const rpga_report* report, rpga_config** out);
RPGA_API rpga_status rpga_config_parse(const char* doc, rpga_config** out);
RPGA_API void rpga_config_free(rpga_config* config);
RPGA_API rpga_status rpga_config_emit(const rpga_config* config, char** out);
RPGA_API rpga_status rpga_config_resources(const rpga_config* config, rpga_format format, char** out);
RPGA_API size_t rpga_config_input_count(const rpga_config* config);
RPGA_API size_t rpga_config_output_count(const rpga_config* config);
/* Value of bound output `index` for one input word. */
RPGA_API rpga_status rpga_config_output(const rpga_config* config, const char* input, size_t index, int* value);
/* One input: "O1=1 O2=0" in text form, or the stage trace when `trace`. */
RPGA_API rpga_status rpga_config_run(const rpga_config* config, const char* input, rpga_format format, int trace,
                                     char** out);
/* All 2^n inputs in ascending order. */
RPGA_API rpga_status rpga_config_run_all(const rpga_config* config, rpga_format format, int trace, char** out);

/* Sessions */
RPGA_API rpga_status rpga_session_new(const rpga_fabric* fabric, rpga_session** out);
RPGA_API void rpga_session_free(rpga_session* session);
RPGA_API rpga_status rpga_session_load(rpga_session* session, const rpga_config* config);
RPGA_API rpga_status rpga_session_input(rpga_session* session, const char* input);
RPGA_API rpga_status rpga_session_next(rpga_session* session);
RPGA_API rpga_status rpga_session_prev(rpga_session* session);
RPGA_API rpga_status rpga_session_reset(rpga_session* session);
RPGA_API rpga_session_mode rpga_session_get_mode(const rpga_session* session);
RPGA_API rpga_status rpga_session_snapshot(const rpga_session* session, rpga_format format, char** out);

/* HTTP API server */
/* Serves on a background thread; port 0 picks a free port. */
RPGA_API rpga_status rpga_server_start(const char* host, int port, rpga_server** out, int* bound_port);
RPGA_API void rpga_server_stop(rpga_server* server);
/* Blocks until the process ends. */
RPGA_API rpga_status rpga_server_run(const char* host, int port);

#ifdef __cplusplus
}
#endif

#endif /* RPGA_RPGA_H */
