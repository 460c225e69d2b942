"""Application Layer - Use Cases, Commands, Queries, and DTOs"""