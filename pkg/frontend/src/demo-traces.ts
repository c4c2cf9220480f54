// Generated by scripts/bundle-traces.mjs from ../traces/*.json; do not edit.
export const demoTraces: Record<string, string> = {
  "bell_all_to_all": "{\"meta\":{\"format_version\":\"1\",\"backend\":\"ket\",\"seed\":1,\"scenario\":\"bell_all_to_all\",\"noise_parameterization\":{\"depolarizing\":\"pauli mix (1-3p/4, p/4, p/4, p/4); p = full replacement probability\",\"dephasing\":\"rho -> (1-p) rho + p Z rho Z\",\"loss\":\"qubit dropped with probability p on arrival\"},\"config\":{\"scenario\":\"bell_all_to_all\",\"backend\":\"ket\",\"seed\":1,\"trials\":1,\"noise\":[],\"qdelay_ns\":0,\"cdelay_ns\":1000000,\"nodes\":5,\"timeout_mult\":1}},\"topology\":{\"nodes\":[{\"id\":0,\"label\":\"N0\"},{\"id\":1,\"label\":\"N1\"},{\"id\":2,\"label\":\"N2\"}],\"qlinks\":[{\"a\":0,\"b\":1,\"delay_ns\":0,\"qmaps\":[]},{\"a\":0,\"b\":2,\"delay_ns\":0,\"qmaps\":[]},{\"a\":1,\"b\":2,\"delay_ns\":0,\"qmaps\":[]}],\"clinks\":[]},\"events\":[{\"t_ns\":0,\"seq\":0,\"type\":\"trial_boundary\",\"trial\":0},{\"t_ns\":0,\"seq\":1,\"type\":\"qubit_create\",\"node\":0,\"qubit\":0},{\"t_ns\":0,\"seq\":2,\"type\":\"qubit_create\",\"node\":0,\"qubit\":1},{\"t_ns\":0,\"seq\":3,\"type\":\"gate\",\"name\":\"H\",\"qubits\":[0]},{\"t_ns\":0,\"seq\":4,\"type\":\"gate\",\"name\":\"CNOT\",\"qubits\":[0,1]},{\"t_ns\":0,\"seq\":5,\"type\":\"egroup\",\"groups\":[[0,1]]},{\"t_ns\":0,\"seq\":6,\"type\":\"qsend\",\"qubit\":1,\"src\":0,\"dst\":1},{\"t_ns\":0,\"seq\":7,\"type\":\"qubit_create\",\"node\":0,\"qubit\":2},{\"t_ns\":0,\"seq\":8,\"type\":\"qubit_create\",\"node\":0,\"qubit\":3},{\"t_ns\":0,\"seq\":9,\"type\":\"gate\",\"name\":\"H\",\"qubits\":[2]},{\"t_ns\":0,\"seq\":10,\"type\":\"gate\",\"name\":\"CNOT\",\"qubits\":[2,3]},{\"t_ns\":0,\"seq\":11,\"type\":\"egroup\",\"groups\":[[0,1],[2,3]]},{\"t_ns\":0,\"seq\":12,\"type\":\"qsend\",\"qubit\":3,\"src\":0,\"dst\":2},{\"t_ns\":0,\"seq\":13,\"type\":\"qubit_create\",\"node\":1,\"qubit\":4},{\"t_ns\":0,\"seq\":14,\"type\":\"qubit_create\",\"node\":1,\"qubit\":5},{\"t_ns\":0,\"seq\":15,\"type\":\"gate\",\"name\":\"H\",\"qubits\":[4]},{\"t_ns\":0,\"seq\":16,\"type\":\"gate\",\"name\":\"CNOT\",\"qubits\":[4,5]},{\"t_ns\":0,\"seq\":17,\"type\":\"egroup\",\"groups\":[[0,1],[2,3],[4,5]]},{\"t_ns\":0,\"seq\":18,\"type\":\"qsend\",\"qubit\":5,\"src\":1,\"dst\":2},{\"t_ns\":0,\"seq\":19,\"type\":\"qrecv\",\"qubit\":1,\"src\":0,\"dst\":1},{\"t_ns\":0,\"seq\":20,\"type\":\"measure\",\"qubit\":0,\"basis\":\"Z\",\"outcome\":1},{\"t_ns\":0,\"seq\":21,\"type\":\"egroup\",\"groups\":[[2,3],[4,5]]},{\"t_ns\":0,\"seq\":22,\"type\":\"measure\",\"qubit\":1,\"basis\":\"Z\",\"outcome\":1},{\"t_ns\":0,\"seq\":23,\"type\":\"qrecv\",\"qubit\":3,\"src\":0,\"dst\":2},{\"t_ns\":0,\"seq\":24,\"type\":\"measure\",\"qubit\":2,\"basis\":\"Z\",\"outcome\":0},{\"t_ns\":0,\"seq\":25,\"type\":\"egroup\",\"groups\":[[4,5]]},{\"t_ns\":0,\"seq\":26,\"type\":\"measure\",\"qubit\":3,\"basis\":\"Z\",\"outcome\":0},{\"t_ns\":0,\"seq\":27,\"type\":\"qrecv\",\"qubit\":5,\"src\":1,\"dst\":2},{\"t_ns\":0,\"seq\":28,\"type\":\"measure\",\"qubit\":4,\"basis\":\"Z\",\"outcome\":1},{\"t_ns\":0,\"seq\":29,\"type\":\"egroup\",\"groups\":[]},{\"t_ns\":0,\"seq\":30,\"type\":\"measure\",\"qubit\":5,\"basis\":\"Z\",\"outcome\":1}]}\n",
  "cluster5": "{\"meta\":{\"format_version\":\"1\",\"backend\":\"ket\",\"seed\":5,\"scenario\":\"cluster5\",\"noise_parameterization\":{\"depolarizing\":\"pauli mix (1-3p/4, p/4, p/4, p/4); p = full replacement probability\",\"dephasing\":\"rho -> (1-p) rho + p Z rho Z\",\"loss\":\"qubit dropped with probability p on arrival\"},\"config\":{\"scenario\":\"cluster5\",\"backend\":\"ket\",\"seed\":5,\"trials\":1,\"noise\":[],\"qdelay_ns\":0,\"cdelay_ns\":1000000,\"nodes\":5,\"timeout_mult\":1}},\"topology\":{\"nodes\":[{\"id\":0,\"label\":\"Orchestrator\"},{\"id\":1,\"label\":\"A\"},{\"id\":2,\"label\":\"B\"},{\"id\":3,\"label\":\"C\"}],\"qlinks\":[{\"a\":0,\"b\":1,\"delay_ns\":0,\"qmaps\":[]},{\"a\":0,\"b\":2,\"delay_ns\":0,\"qmaps\":[]},{\"a\":0,\"b\":3,\"delay_ns\":0,\"qmaps\":[]}],\"clinks\":[{\"a\":0,\"b\":1,\"delay_ns\":1000000},{\"a\":0,\"b\":2,\"delay_ns\":1000000},{\"a\":0,\"b\":3,\"delay_ns\":1000000}]},\"events\":[{\"t_ns\":0,\"seq\":0,\"type\":\"trial_boundary\",\"trial\":0},{\"t_ns\":0,\"seq\":1,\"type\":\"qubit_create\",\"node\":0,\"qubit\":0},{\"t_ns\":0,\"seq\":2,\"type\":\"qubit_create\",\"node\":0,\"qubit\":1},{\"t_ns\":0,\"seq\":3,\"type\":\"qubit_create\",\"node\":0,\"qubit\":2},{\"t_ns\":0,\"seq\":4,\"type\":\"qubit_create\",\"node\":0,\"qubit\":3},{\"t_ns\":0,\"seq\":5,\"type\":\"qubit_create\",\"node\":0,\"qubit\":4},{\"t_ns\":0,\"seq\":6,\"type\":\"gate\",\"name\":\"H\",\"qubits\":[0]},{\"t_ns\":0,\"seq\":7,\"type\":\"gate\",\"name\":\"H\",\"qubits\":[1]},{\"t_ns\":0,\"seq\":8,\"type\":\"gate\",\"name\":\"H\",\"qubits\":[2]},{\"t_ns\":0,\"seq\":9,\"type\":\"gate\",\"name\":\"H\",\"qubits\":[3]},{\"t_ns\":0,\"seq\":10,\"type\":\"gate\",\"name\":\"H\",\"qubits\":[4]},{\"t_ns\":0,\"seq\":11,\"type\":\"gate\",\"name\":\"CZ\",\"qubits\":[0,1]},{\"t_ns\":0,\"seq\":12,\"type\":\"egroup\",\"groups\":[[0,1]]},{\"t_ns\":0,\"seq\":13,\"type\":\"gate\",\"name\":\"CZ\",\"qubits\":[1,2]},{\"t_ns\":0,\"seq\":14,\"type\":\"egroup\",\"groups\":[[0,1,2]]},{\"t_ns\":0,\"seq\":15,\"type\":\"gate\",\"name\":\"CZ\",\"qubits\":[2,3]},{\"t_ns\":0,\"seq\":16,\"type\":\"egroup\",\"groups\":[[0,1,2,3]]},{\"t_ns\":0,\"seq\":17,\"type\":\"gate\",\"name\":\"CZ\",\"qubits\":[3,4]},{\"t_ns\":0,\"seq\":18,\"type\":\"egroup\",\"groups\":[[0,1,2,3,4]]},{\"t_ns\":0,\"seq\":19,\"type\":\"qsend\",\"qubit\":0,\"src\":0,\"dst\":1},{\"t_ns\":0,\"seq\":20,\"type\":\"qrecv\",\"qubit\":0,\"src\":0,\"dst\":1},{\"t_ns\":0,\"seq\":21,\"type\":\"csend\",\"src\":1,\"dst\":0,\"payload_b64\":\"AQ==\",\"tag\":\"ack\"},{\"t_ns\":1000000,\"seq\":22,\"type\":\"crecv\",\"src\":1,\"dst\":0,\"payload_b64\":\"AQ==\",\"tag\":\"ack\"},{\"t_ns\":1000000,\"seq\":23,\"type\":\"qsend\",\"qubit\":2,\"src\":0,\"dst\":2},{\"t_ns\":1000000,\"seq\":24,\"type\":\"qrecv\",\"qubit\":2,\"src\":0,\"dst\":2},{\"t_ns\":1000000,\"seq\":25,\"type\":\"csend\",\"src\":2,\"dst\":0,\"payload_b64\":\"AQ==\",\"tag\":\"ack\"},{\"t_ns\":2000000,\"seq\":26,\"type\":\"crecv\",\"src\":2,\"dst\":0,\"payload_b64\":\"AQ==\",\"tag\":\"ack\"},{\"t_ns\":2000000,\"seq\":27,\"type\":\"qsend\",\"qubit\":4,\"src\":0,\"dst\":3},{\"t_ns\":2000000,\"seq\":28,\"type\":\"qrecv\",\"qubit\":4,\"src\":0,\"dst\":3},{\"t_ns\":2000000,\"seq\":29,\"type\":\"csend\",\"src\":3,\"dst\":0,\"payload_b64\":\"AQ==\",\"tag\":\"ack\"},{\"t_ns\":3000000,\"seq\":30,\"type\":\"crecv\",\"src\":3,\"dst\":0,\"payload_b64\":\"AQ==\",\"tag\":\"ack\"},{\"t_ns\":3000000,\"seq\":31,\"type\":\"measure\",\"qubit\":1,\"basis\":\"X\",\"outcome\":0},{\"t_ns\":3000000,\"seq\":32,\"type\":\"egroup\",\"groups\":[[0,2,3,4]]},{\"t_ns\":3000000,\"seq\":33,\"type\":\"measure\",\"qubit\":3,\"basis\":\"X\",\"outcome\":0},{\"t_ns\":3000000,\"seq\":34,\"type\":\"egroup\",\"groups\":[[0,2,4]]},{\"t_ns\":3000000,\"seq\":35,\"type\":\"csend\",\"src\":0,\"dst\":1,\"payload_b64\":\"AQ==\",\"tag\":\"correction\"},{\"t_ns\":3000000,\"seq\":36,\"type\":\"csend\",\"src\":0,\"dst\":2,\"payload_b64\":\"AA==\",\"tag\":\"correction\"},{\"t_ns\":3000000,\"seq\":37,\"type\":\"csend\",\"src\":0,\"dst\":3,\"payload_b64\":\"AQ==\",\"tag\":\"correction\"},{\"t_ns\":4000000,\"seq\":38,\"type\":\"crecv\",\"src\":0,\"dst\":1,\"payload_b64\":\"AQ==\",\"tag\":\"correction\"},{\"t_ns\":4000000,\"seq\":39,\"type\":\"gate\",\"name\":\"H\",\"qubits\":[0]},{\"t_ns\":4000000,\"seq\":40,\"type\":\"crecv\",\"src\":0,\"dst\":2,\"payload_b64\":\"AA==\",\"tag\":\"correction\"},{\"t_ns\":4000000,\"seq\":41,\"type\":\"crecv\",\"src\":0,\"dst\":3,\"payload_b64\":\"AQ==\",\"tag\":\"correction\"},{\"t_ns\":4000000,\"seq\":42,\"type\":\"gate\",\"name\":\"H\",\"qubits\":[4]}]}\n",
  "ghz4": "{\"meta\":{\"format_version\":\"1\",\"backend\":\"ket\",\"seed\":11,\"scenario\":\"ghz4\",\"noise_parameterization\":{\"depolarizing\":\"pauli mix (1-3p/4, p/4, p/4, p/4); p = full replacement probability\",\"dephasing\":\"rho -> (1-p) rho + p Z rho Z\",\"loss\":\"qubit dropped with probability p on arrival\"},\"config\":{\"scenario\":\"ghz4\",\"backend\":\"ket\",\"seed\":11,\"trials\":1,\"noise\":[],\"qdelay_ns\":0,\"cdelay_ns\":1000000,\"nodes\":5,\"timeout_mult\":1}},\"topology\":{\"nodes\":[{\"id\":0,\"label\":\"Source\"},{\"id\":1,\"label\":\"P1\"},{\"id\":2,\"label\":\"P2\"},{\"id\":3,\"label\":\"P3\"}],\"qlinks\":[{\"a\":0,\"b\":1,\"delay_ns\":0,\"qmaps\":[]},{\"a\":0,\"b\":2,\"delay_ns\":0,\"qmaps\":[]},{\"a\":0,\"b\":3,\"delay_ns\":0,\"qmaps\":[]}],\"clinks\":[{\"a\":0,\"b\":1,\"delay_ns\":1000000},{\"a\":0,\"b\":2,\"delay_ns\":1000000},{\"a\":0,\"b\":3,\"delay_ns\":1000000}]},\"events\":[{\"t_ns\":0,\"seq\":0,\"type\":\"trial_boundary\",\"trial\":0},{\"t_ns\":0,\"seq\":1,\"type\":\"qubit_create\",\"node\":0,\"qubit\":0},{\"t_ns\":0,\"seq\":2,\"type\":\"qubit_create\",\"node\":0,\"qubit\":1},{\"t_ns\":0,\"seq\":3,\"type\":\"qubit_create\",\"node\":0,\"qubit\":2},{\"t_ns\":0,\"seq\":4,\"type\":\"qubit_create\",\"node\":0,\"qubit\":3},{\"t_ns\":0,\"seq\":5,\"type\":\"gate\",\"name\":\"H\",\"qubits\":[0]},{\"t_ns\":0,\"seq\":6,\"type\":\"gate\",\"name\":\"CNOT\",\"qubits\":[0,1]},{\"t_ns\":0,\"seq\":7,\"type\":\"egroup\",\"groups\":[[0,1]]},{\"t_ns\":0,\"seq\":8,\"type\":\"gate\",\"name\":\"CNOT\",\"qubits\":[1,2]},{\"t_ns\":0,\"seq\":9,\"type\":\"egroup\",\"groups\":[[0,1,2]]},{\"t_ns\":0,\"seq\":10,\"type\":\"gate\",\"name\":\"CNOT\",\"qubits\":[2,3]},{\"t_ns\":0,\"seq\":11,\"type\":\"egroup\",\"groups\":[[0,1,2,3]]},{\"t_ns\":0,\"seq\":12,\"type\":\"qsend\",\"qubit\":1,\"src\":0,\"dst\":1},{\"t_ns\":0,\"seq\":13,\"type\":\"qrecv\",\"qubit\":1,\"src\":0,\"dst\":1},{\"t_ns\":0,\"seq\":14,\"type\":\"csend\",\"src\":1,\"dst\":0,\"payload_b64\":\"AQ==\",\"tag\":\"ack\"},{\"t_ns\":1000000,\"seq\":15,\"type\":\"crecv\",\"src\":1,\"dst\":0,\"payload_b64\":\"AQ==\",\"tag\":\"ack\"},{\"t_ns\":1000000,\"seq\":16,\"type\":\"qsend\",\"qubit\":2,\"src\":0,\"dst\":2},{\"t_ns\":1000000,\"seq\":17,\"type\":\"qrecv\",\"qubit\":2,\"src\":0,\"dst\":2},{\"t_ns\":1000000,\"seq\":18,\"type\":\"csend\",\"src\":2,\"dst\":0,\"payload_b64\":\"AQ==\",\"tag\":\"ack\"},{\"t_ns\":2000000,\"seq\":19,\"type\":\"crecv\",\"src\":2,\"dst\":0,\"payload_b64\":\"AQ==\",\"tag\":\"ack\"},{\"t_ns\":2000000,\"seq\":20,\"type\":\"qsend\",\"qubit\":3,\"src\":0,\"dst\":3},{\"t_ns\":2000000,\"seq\":21,\"type\":\"qrecv\",\"qubit\":3,\"src\":0,\"dst\":3},{\"t_ns\":2000000,\"seq\":22,\"type\":\"csend\",\"src\":3,\"dst\":0,\"payload_b64\":\"AQ==\",\"tag\":\"ack\"},{\"t_ns\":3000000,\"seq\":23,\"type\":\"crecv\",\"src\":3,\"dst\":0,\"payload_b64\":\"AQ==\",\"tag\":\"ack\"},{\"t_ns\":3000000,\"seq\":24,\"type\":\"measure\",\"qubit\":0,\"basis\":\"Z\",\"outcome\":1},{\"t_ns\":3000000,\"seq\":25,\"type\":\"egroup\",\"groups\":[[1,2,3]]},{\"t_ns\":3000000,\"seq\":26,\"type\":\"measure\",\"qubit\":1,\"basis\":\"Z\",\"outcome\":1},{\"t_ns\":3000000,\"seq\":27,\"type\":\"egroup\",\"groups\":[[2,3]]},{\"t_ns\":3000000,\"seq\":28,\"type\":\"measure\",\"qubit\":2,\"basis\":\"Z\",\"outcome\":1},{\"t_ns\":3000000,\"seq\":29,\"type\":\"egroup\",\"groups\":[]},{\"t_ns\":3000000,\"seq\":30,\"type\":\"measure\",\"qubit\":3,\"basis\":\"Z\",\"outcome\":1}]}\n",
  "teleportation": "{\"meta\":{\"format_version\":\"1\",\"backend\":\"ket\",\"seed\":7,\"scenario\":\"teleportation\",\"noise_parameterization\":{\"depolarizing\":\"pauli mix (1-3p/4, p/4, p/4, p/4); p = full replacement probability\",\"dephasing\":\"rho -> (1-p) rho + p Z rho Z\",\"loss\":\"qubit dropped with probability p on arrival\"},\"config\":{\"scenario\":\"teleportation\",\"backend\":\"ket\",\"seed\":7,\"trials\":1,\"noise\":[],\"qdelay_ns\":0,\"cdelay_ns\":1000000,\"nodes\":5,\"timeout_mult\":1}},\"topology\":{\"nodes\":[{\"id\":0,\"label\":\"A\"},{\"id\":1,\"label\":\"B\"}],\"qlinks\":[{\"a\":0,\"b\":1,\"delay_ns\":0,\"qmaps\":[]}],\"clinks\":[{\"a\":0,\"b\":1,\"delay_ns\":1000000}]},\"events\":[{\"t_ns\":0,\"seq\":0,\"type\":\"trial_boundary\",\"trial\":0},{\"t_ns\":0,\"seq\":1,\"type\":\"qubit_create\",\"node\":0,\"qubit\":0},{\"t_ns\":0,\"seq\":2,\"type\":\"qubit_create\",\"node\":0,\"qubit\":1},{\"t_ns\":0,\"seq\":3,\"type\":\"gate\",\"name\":\"H\",\"qubits\":[0]},{\"t_ns\":0,\"seq\":4,\"type\":\"gate\",\"name\":\"CNOT\",\"qubits\":[0,1]},{\"t_ns\":0,\"seq\":5,\"type\":\"egroup\",\"groups\":[[0,1]]},{\"t_ns\":1000000,\"seq\":6,\"type\":\"qsend\",\"qubit\":1,\"src\":0,\"dst\":1},{\"t_ns\":1000000,\"seq\":7,\"type\":\"qubit_create\",\"node\":0,\"qubit\":2},{\"t_ns\":1000000,\"seq\":8,\"type\":\"gate\",\"name\":\"H\",\"qubits\":[2]},{\"t_ns\":1000000,\"seq\":9,\"type\":\"qrecv\",\"qubit\":1,\"src\":0,\"dst\":1},{\"t_ns\":4000000,\"seq\":10,\"type\":\"gate\",\"name\":\"CNOT\",\"qubits\":[2,0]},{\"t_ns\":4000000,\"seq\":11,\"type\":\"egroup\",\"groups\":[[0,1,2]]},{\"t_ns\":4000000,\"seq\":12,\"type\":\"gate\",\"name\":\"H\",\"qubits\":[2]},{\"t_ns\":4000000,\"seq\":13,\"type\":\"measure\",\"qubit\":2,\"basis\":\"Z\",\"outcome\":1},{\"t_ns\":4000000,\"seq\":14,\"type\":\"egroup\",\"groups\":[[0,1]]},{\"t_ns\":4000000,\"seq\":15,\"type\":\"measure\",\"qubit\":0,\"basis\":\"Z\",\"outcome\":1},{\"t_ns\":4000000,\"seq\":16,\"type\":\"egroup\",\"groups\":[]},{\"t_ns\":4000000,\"seq\":17,\"type\":\"csend\",\"src\":0,\"dst\":1,\"payload_b64\":\"AQE=\",\"tag\":\"corrections\"},{\"t_ns\":5000000,\"seq\":18,\"type\":\"crecv\",\"src\":0,\"dst\":1,\"payload_b64\":\"AQE=\",\"tag\":\"corrections\"},{\"t_ns\":5000000,\"seq\":19,\"type\":\"gate\",\"name\":\"X\",\"qubits\":[1]},{\"t_ns\":5000000,\"seq\":20,\"type\":\"gate\",\"name\":\"Z\",\"qubits\":[1]},{\"t_ns\":5000000,\"seq\":21,\"type\":\"measure\",\"qubit\":1,\"basis\":\"X\",\"outcome\":0}]}\n",
};
