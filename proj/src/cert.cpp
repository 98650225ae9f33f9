// placeholder, implemented later in this build
