"""Use Cases for Application Layer"""